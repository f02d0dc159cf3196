#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdiffsim/model.hpp"

namespace cdiffsim {

enum class SurfaceKind { HighTouch, LowTouch };

std::string_view to_string(SurfaceKind kind);

enum class CellKind : unsigned char { Floor, Wall, Surface };

struct Surface {
  SurfaceKind kind = SurfaceKind::HighTouch;
  Cell position{};
  double contamination = 0.0;
};

// 30x30 ward grid: a one-cell wall ring, 72 high-touch and 72 low-touch
// surface cells on a mirror-symmetric lattice, floor everywhere else.
// Surface cells are walkable; walls are not.
class Grid {
 public:
  static constexpr int kWidth = 30;
  static constexpr int kHeight = 30;
  static constexpr int kSurfacesPerKind = 72;

  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.row < kHeight && c.col >= 0 && c.col < kWidth;
  }
  CellKind cell(Cell c) const { return cells_[index(c)]; }
  bool walkable(Cell c) const { return in_bounds(c) && cells_[index(c)] != CellKind::Wall; }

  // The surface occupying the cell, or nullptr for floor/wall cells.
  Surface* surface_at(Cell c);
  const Surface* surface_at(Cell c) const;

  // Walkable subset of the 8 Moore neighbors, in row-major order.
  std::vector<Cell> walkable_neighbors(Cell c) const;
  // Allocation-free variant for the movement loop; returns the count.
  int walkable_neighbors(Cell c, std::array<Cell, 8>& out) const;

  std::vector<Surface>& surfaces() { return surfaces_; }
  const std::vector<Surface>& surfaces() const { return surfaces_; }
  const std::vector<Cell>& walkable_cells() const { return walkable_cells_; }

  double total_contamination(SurfaceKind kind) const;

  // One character per cell, 30 lines of 30: '#' wall, '.' floor,
  // 'H' high-touch, 'L' low-touch. Each line ends with '\n'.
  std::string layout_text() const;

 private:
  friend Grid generate_layout();
  static int index(Cell c) { return c.row * kWidth + c.col; }

  std::array<CellKind, kWidth * kHeight> cells_{};
  std::array<short, kWidth * kHeight> surface_index_{};
  std::vector<Surface> surfaces_;
  std::vector<Cell> walkable_cells_;
};

// Deterministic canonical layout. High-touch surfaces sit at rows
// {3,5,7,9,11,13,16,18,20,22,24,26} x columns {3,5,7,9,11,13}; low-touch
// surfaces occupy the mirrored columns 29-c. All contaminations start at 0.
Grid generate_layout();

}  // namespace cdiffsim
