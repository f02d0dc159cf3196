#include "cdiffsim/environment.hpp"

#include <algorithm>

namespace cdiffsim {

std::string_view to_string(SurfaceKind kind) {
  return kind == SurfaceKind::HighTouch ? "high_touch" : "low_touch";
}

Surface* Grid::surface_at(Cell c) {
  if (!in_bounds(c)) return nullptr;
  const short idx = surface_index_[index(c)];
  return idx < 0 ? nullptr : &surfaces_[static_cast<std::size_t>(idx)];
}

const Surface* Grid::surface_at(Cell c) const {
  if (!in_bounds(c)) return nullptr;
  const short idx = surface_index_[index(c)];
  return idx < 0 ? nullptr : &surfaces_[static_cast<std::size_t>(idx)];
}

int Grid::walkable_neighbors(Cell c, std::array<Cell, 8>& out) const {
  int n = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const Cell neighbor{c.row + dr, c.col + dc};
      if (walkable(neighbor)) out[static_cast<std::size_t>(n++)] = neighbor;
    }
  }
  return n;
}

std::vector<Cell> Grid::walkable_neighbors(Cell c) const {
  std::array<Cell, 8> buf{};
  const int n = walkable_neighbors(c, buf);
  return std::vector<Cell>(buf.begin(), buf.begin() + n);
}

double Grid::total_contamination(SurfaceKind kind) const {
  double total = 0.0;
  for (const Surface& s : surfaces_) {
    if (s.kind == kind) total += s.contamination;
  }
  return total;
}

std::string Grid::layout_text() const {
  std::string text;
  text.reserve(static_cast<std::size_t>(kHeight) * (kWidth + 1));
  for (int r = 0; r < kHeight; ++r) {
    for (int c = 0; c < kWidth; ++c) {
      const Cell cell{r, c};
      switch (this->cell(cell)) {
        case CellKind::Wall: text += '#'; break;
        case CellKind::Floor: text += '.'; break;
        case CellKind::Surface:
          text += surface_at(cell)->kind == SurfaceKind::HighTouch ? 'H' : 'L';
          break;
      }
    }
    text += '\n';
  }
  return text;
}

namespace {

constexpr int kSurfaceRows[] = {3, 5, 7, 9, 11, 13, 16, 18, 20, 22, 24, 26};
constexpr int kHighTouchCols[] = {3, 5, 7, 9, 11, 13};

bool contains(const int* first, const int* last, int value) {
  return std::find(first, last, value) != last;
}

}  // namespace

Grid generate_layout() {
  Grid g;
  g.surface_index_.fill(-1);
  for (int r = 0; r < Grid::kHeight; ++r) {
    for (int c = 0; c < Grid::kWidth; ++c) {
      const Cell cell{r, c};
      const int idx = r * Grid::kWidth + c;
      const bool border =
          r == 0 || r == Grid::kHeight - 1 || c == 0 || c == Grid::kWidth - 1;
      if (border) {
        g.cells_[idx] = CellKind::Wall;
        continue;
      }
      g.walkable_cells_.push_back(cell);
      const bool surface_row = contains(std::begin(kSurfaceRows), std::end(kSurfaceRows), r);
      const bool high = surface_row &&
                        contains(std::begin(kHighTouchCols), std::end(kHighTouchCols), c);
      const bool low = surface_row && contains(std::begin(kHighTouchCols),
                                               std::end(kHighTouchCols), Grid::kWidth - 1 - c);
      if (high || low) {
        g.cells_[idx] = CellKind::Surface;
        g.surface_index_[idx] = static_cast<short>(g.surfaces_.size());
        g.surfaces_.push_back(
            {high ? SurfaceKind::HighTouch : SurfaceKind::LowTouch, cell, 0.0});
      } else {
        g.cells_[idx] = CellKind::Floor;
      }
    }
  }
  return g;
}

}  // namespace cdiffsim
