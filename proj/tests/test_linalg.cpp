#include <doctest.h>

#include "spmet/linalg.hpp"

using namespace spmet;

namespace {

RatMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank(RatMatrix::identity(3)) == 3);
  CHECK(exact_rank(from_rows({{2, 1}, {0, 1}})) == 2);
  CHECK(exact_rank(RatMatrix(4, 5)) == 0);
  CHECK(exact_rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
}

TEST_CASE("kernel vector") {
  RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
  auto v = kernel_vector(m);
  REQUIRE(!v.empty());
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || x != 0;
  CHECK(nonzero);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s(0);
    for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
    CHECK(s == 0);
  }
  CHECK(kernel_vector(RatMatrix::identity(3)).empty());
}

TEST_CASE("column span comparison") {
  RatMatrix a = from_rows({{1, 0}, {0, 1}, {0, 0}});
  RatMatrix scaled = from_rows({{2, 0}, {0, -3}, {0, 0}});
  RatMatrix swapped = from_rows({{0, 1}, {1, 0}, {0, 0}});
  RatMatrix bigger = from_rows({{1, 0}, {0, 1}, {0, 1}});
  CHECK(same_column_span(a, a));
  CHECK(same_column_span(a, scaled));
  CHECK(same_column_span(a, swapped));
  CHECK(!same_column_span(a, bigger));
}

TEST_CASE("span basis") {
  SpanBasis s(3);
  CHECK(s.insert({Rational(1), Rational(1), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(2), Rational(0)}));
  CHECK(!s.insert({Rational(3), Rational(-1), Rational(0)}));
  CHECK(s.dimension() == 2);
  CHECK(s.contains({Rational(5), Rational(7), Rational(0)}));
  CHECK(!s.contains({Rational(0), Rational(0), Rational(1)}));
}
