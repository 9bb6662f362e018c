#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`. The OpenMP
// versions reduce over fixed-size blocks in index order, so their results
// do not depend on the thread count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "sconvex/core_types.hpp"

namespace sconvex::kernels {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline constexpr std::size_t kBlockPanels = 4096;

/// Result of scanning f(ax+(1-a)y) - a^s f(x) - (1-a)^s f(y) over a grid.
struct SConvexScan {
  double worst = -INFINITY;
  std::size_t ix = 0;
  std::size_t iy = 0;
  std::size_t ialpha = 0;
};

namespace detail {

inline double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(what);
  return v;
}

inline double panel_midpoint_term(const Evaluator& f, double lo, double hi) {
  return checked(f(0.5 * (lo + hi)), "evaluator returned a non-finite value") *
         (hi - lo);
}

template <class PanelTerm>
double panel_bound_term(PanelTerm& term, std::span<const double> nodes,
                        std::span<const double> dvals, std::size_t i) {
  const double h = nodes[i + 1] - nodes[i];
  return h * h * term(dvals[i], dvals[i + 1]);
}

// Scans one x row; first strict maximum in (iy, ialpha) order wins.
inline SConvexScan scan_row(const Evaluator& f, std::span<const double> pts,
                            std::span<const double> fvals,
                            std::span<const double> alphas,
                            std::span<const double> wa,
                            std::span<const double> wb, std::size_t ix) {
  SConvexScan best;
  const double x = pts[ix];
  for (std::size_t iy = 0; iy < pts.size(); ++iy) {
    const double y = pts[iy];
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      const double alpha = alphas[k];
      const double z = alpha * x + (1.0 - alpha) * y;
      const double lhs =
          checked(f(z), "evaluator failure at an s-convexity grid point");
      const double v = lhs - wa[k] * fvals[ix] - wb[k] * fvals[iy];
      if (v > best.worst) best = SConvexScan{v, ix, iy, k};
    }
  }
  return best;
}

struct ScanTables {
  std::vector<double> fvals;
  std::vector<double> wa;
  std::vector<double> wb;
};

inline ScanTables scan_tables(const Evaluator& f, double s,
                              std::span<const double> pts,
                              std::span<const double> alphas) {
  ScanTables t;
  t.fvals.reserve(pts.size());
  for (double p : pts) {
    t.fvals.push_back(
        checked(f(p), "evaluator failure at an s-convexity grid point"));
  }
  for (double a : alphas) {
    t.wa.push_back(std::pow(a, s));
    t.wb.push_back(std::pow(1.0 - a, s));
  }
  return t;
}

// Rethrows the first exception captured inside a parallel region.
class ExceptionSlot {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
#pragma omp critical(sconvex_exception_slot)
      if (!ptr_) ptr_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::exception_ptr ptr_;
};

}  // namespace detail

namespace serial {

/// T(f, d) = sum f((x_i + x_{i+1})/2) (x_{i+1} - x_i).
inline double midpoint_sum(const Evaluator& f, std::span<const double> nodes) {
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    acc.add(detail::panel_midpoint_term(f, nodes[i], nodes[i + 1]));
  }
  return acc.value();
}

/// sum (x_{i+1} - x_i)^2 term(|f'(x_i)|, |f'(x_{i+1})|).
template <class PanelTerm>
double bound_sum(std::span<const double> nodes, std::span<const double> dvals,
                 PanelTerm term) {
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    acc.add(detail::panel_bound_term(term, nodes, dvals, i));
  }
  return acc.value();
}

inline SConvexScan sconvex_scan(const Evaluator& f, double s,
                                std::span<const double> pts,
                                std::span<const double> alphas) {
  const auto t = detail::scan_tables(f, s, pts, alphas);
  SConvexScan best;
  for (std::size_t ix = 0; ix < pts.size(); ++ix) {
    const auto row = detail::scan_row(f, pts, t.fvals, alphas, t.wa, t.wb, ix);
    if (row.worst > best.worst) best = row;
  }
  return best;
}

}  // namespace serial

namespace omp {

namespace detail_blocks {

template <class BlockFn>
double blocked_sum(std::size_t panels, BlockFn block_fn) {
  const std::size_t nblocks = (panels + kBlockPanels - 1) / kBlockPanels;
  std::vector<double> partial(nblocks, 0.0);
  detail::ExceptionSlot slot;
  const auto nb = static_cast<std::ptrdiff_t>(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < nb; ++blk) {
    slot.run([&] {
      const std::size_t lo = static_cast<std::size_t>(blk) * kBlockPanels;
      const std::size_t hi = std::min(panels, lo + kBlockPanels);
      CompensatedSum acc;
      for (std::size_t i = lo; i < hi; ++i) acc.add(block_fn(i));
      partial[static_cast<std::size_t>(blk)] = acc.value();
    });
  }
  slot.rethrow();
  CompensatedSum total;
  for (double v : partial) total.add(v);
  return total.value();
}

}  // namespace detail_blocks

inline double midpoint_sum(const Evaluator& f, std::span<const double> nodes) {
  if (nodes.size() < 2) return 0.0;
  return detail_blocks::blocked_sum(nodes.size() - 1, [&](std::size_t i) {
    return detail::panel_midpoint_term(f, nodes[i], nodes[i + 1]);
  });
}

template <class PanelTerm>
double bound_sum(std::span<const double> nodes, std::span<const double> dvals,
                 PanelTerm term) {
  if (nodes.size() < 2) return 0.0;
  return detail_blocks::blocked_sum(nodes.size() - 1, [&](std::size_t i) {
    return detail::panel_bound_term(term, nodes, dvals, i);
  });
}

inline SConvexScan sconvex_scan(const Evaluator& f, double s,
                                std::span<const double> pts,
                                std::span<const double> alphas) {
  const auto t = detail::scan_tables(f, s, pts, alphas);
  std::vector<SConvexScan> rows(pts.size());
  detail::ExceptionSlot slot;
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ix = 0; ix < n; ++ix) {
    slot.run([&] {
      const auto i = static_cast<std::size_t>(ix);
      rows[i] = detail::scan_row(f, pts, t.fvals, alphas, t.wa, t.wb, i);
    });
  }
  slot.rethrow();
  SConvexScan best;
  for (const auto& row : rows) {
    if (row.worst > best.worst) best = row;
  }
  return best;
}

}  // namespace omp

}  // namespace sconvex::kernels
