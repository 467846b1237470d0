#pragma once

#include <utility>

#include "css/grid.hpp"

namespace css {

/// The reduced unknown of the m-equivariant system: phi = e^{i m theta} u(r),
/// with coupling g and the current time.
struct EquivariantState {
  int m = 0;
  double g = 1.0;
  GridPtr grid;
  CVec u;
  double t = 0.0;

  EquivariantState() = default;
  EquivariantState(int m_, double g_, GridPtr grid_, CVec u_, double t_ = 0.0)
      : m(m_), g(g_), grid(std::move(grid_)), u(std::move(u_)), t(t_) {
    if (u.size() != grid->n()) throw Error(ErrorCode::LengthMismatch, "profile length != grid.n");
  }

  Vec abs2() const { return u.abs2(); }
};

}  // namespace css
