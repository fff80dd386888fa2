#include "zdx/optimizer/tabulate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace zdx {

std::vector<DensityBound> table_bounds(bool compare) {
  std::vector<DensityBound> out{zerodensity1(), zerodensity2()};
  if (compare) {
    out.push_back(ivic());
    for (int k = 2; k <= 8; ++k) out.push_back(jutila(k));
  }
  return out;
}

std::string cell_id(const DensityBound& b) { return b.k ? b.id + std::to_string(*b.k) : b.id; }

namespace {

TableRow make_row(const Rat& sigma, const std::vector<DensityBound>& bounds, const TabulateOptions& opts) {
  TableRow row{sigma, {}, {}, ""};
  std::optional<Rat> best;
  for (const auto& b : bounds) {
    TableCell cell{cell_id(b), std::nullopt};
    if (b.in_range(sigma)) {
      cell.value = density_exponent(b, sigma);
      if (!best || *cell.value < *best) {
        best = cell.value;
        row.best = cell.id;
      }
    }
    row.cells.push_back(std::move(cell));
  }
  for (Strategy s : opts.strategies) {
    ReplayCell rc{s, std::nullopt};
    if (in_strategy_range(s, sigma)) rc.cert = replay(s, sigma);
    row.replays.push_back(std::move(rc));
  }
  return row;
}

}  // namespace

std::vector<TableRow> tabulate(const std::vector<Rat>& grid, const TabulateOptions& opts) {
  for (const Rat& s : grid)
    if (s <= Rat(1, 2) || s >= Rat(1)) throw std::invalid_argument("tabulate: sigma = " + s.str() + " is outside (1/2, 1)");
  const std::vector<DensityBound> bounds = table_bounds(opts.compare);
  std::vector<std::optional<TableRow>> rows(grid.size());
  unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        rows[i] = make_row(grid[i], bounds, opts);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<TableRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, const Rat& step) {
  if (step.sign() <= 0) throw std::invalid_argument("grid step " + step.str() + " must be positive");
  std::vector<Rat> out;
  for (Rat s = lo; s <= hi; s += step) out.push_back(s);
  return out;
}

}  // namespace zdx
