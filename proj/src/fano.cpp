#include "birat/fano.hpp"

#include <stdexcept>

namespace birat::fano {

int coindex(int dim, int index) {
  if (index < 1)
    throw std::domain_error("Fano index must be at least 1");
  if (index > dim + 1)
    throw std::domain_error(
        "Fano index cannot exceed dim + 1 (Kobayashi-Ochiai)");
  return dim + 1 - index;
}

std::optional<std::vector<int>> admissible_degrees(int dim, int index) {
  const int c = coindex(dim, index);
  switch (c) {
    case 0:
      return std::vector<int>{1};
    case 1:
      return std::vector<int>{2};
    case 2:
      return std::vector<int>{3, 4, 5};
    case 3:
      // Mukai range; genus bounds trim the top of the list in the
      // dimensions that actually occur in the searches.
      if (dim == 6) return std::vector<int>{4, 6, 8, 10, 12, 14, 16};
      if (dim == 4 || dim == 5)
        return std::vector<int>{4, 6, 8, 10, 12, 14, 16, 18};
      return std::vector<int>{4, 6, 8, 10, 12, 14, 16, 18, 22};
    default:
      return std::nullopt;
  }
}

std::string coindex_family_name(int c) {
  switch (c) {
    case 0:
      return "projective space";
    case 1:
      return "quadric";
    case 2:
      return "del Pezzo";
    case 3:
      return "Mukai";
    default:
      return "unclassified";
  }
}

bool degree_coindex_compatible(const exact::Int& z, int c) {
  if (z == 1 && c > 0) return false;
  if (z == 2 && c > 1) return false;
  if (z == 3 && c > 2) return false;
  return true;
}

}  // namespace birat::fano
