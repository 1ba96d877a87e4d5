#include "mnhd/design.hpp"

namespace mnhd {

namespace {

QuadValue q(long a, long b = 0, unsigned long m = 0) {
  return QuadValue(mpq_class(a), mpq_class(b), m);
}

CatalogRow integral(std::size_t vertices, long l1, long l2, long l3,
                    std::size_t v, std::size_t d, std::size_t lambda) {
  return {vertices, {q(0), q(l1), q(l2), q(l3)}, v, d, lambda};
}

CatalogRow surd(std::size_t vertices, long centre, unsigned long m, long top,
                std::size_t v, std::size_t d, std::size_t lambda) {
  return {vertices, {q(0), q(centre, -1, m), q(centre, 1, m), q(top)}, v, d,
          lambda};
}

}  // namespace

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows{
      integral(10, 3, 5, 8, 5, 4, 3),
      integral(12, 4, 6, 10, 6, 5, 4),
      integral(14, 5, 7, 12, 7, 6, 5),
      surd(14, 3, 2, 6, 7, 3, 1),
      surd(14, 4, 2, 8, 7, 4, 2),
      integral(16, 6, 8, 14, 8, 7, 6),
      integral(18, 7, 9, 16, 9, 8, 7),
      integral(20, 8, 10, 18, 10, 9, 8),
      integral(22, 9, 11, 20, 11, 10, 9),
      surd(22, 5, 3, 10, 11, 5, 2),
      surd(22, 6, 3, 12, 11, 6, 3),
      integral(24, 10, 12, 22, 12, 11, 10),
      integral(26, 11, 13, 24, 13, 12, 11),
      surd(26, 4, 3, 8, 13, 4, 1),
      surd(26, 9, 3, 18, 13, 9, 6),
      integral(28, 12, 14, 26, 14, 13, 12),
      integral(30, 5, 9, 14, 15, 7, 3),
      integral(30, 6, 10, 16, 15, 8, 4),
      integral(30, 13, 15, 28, 15, 14, 13),
  };
  return rows;
}

}  // namespace mnhd
