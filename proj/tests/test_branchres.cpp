#include "support.hpp"

#include "aatkit/branchres.hpp"

using namespace aatkit;
using namespace aatkit::test;

namespace {

const std::vector<std::string> kXY{"x", "y"};

BranchProblem problem(const std::string& p, long a, long b) { return {parse_polynomial(p, kXY), Rational(a), Rational(b)}; }

std::size_t cell_of(const std::vector<Cell1D>& cells, const Rational& x) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto l = cells[i].left;
    if (cells[i].kind == Cell1D::point) {
      if (compare(x, l) == 0) return i;
    } else {
      auto r = cells[i].right;
      if (compare(x, l) > 0 && compare(x, r) < 0) return i;
    }
  }
  return cells.size();
}

}  // namespace

TEST_SUITE("sturm") {
  TEST_CASE("root counting and isolation") {
    const UPoly p({Rational(-2), Rational(0), Rational(1)});
    CHECK(count_roots_closed(p, Rational(0), Rational(2)) == 1);
    CHECK(count_roots_closed(p, Rational(-2), Rational(2)) == 2);
    const UPoly c({Rational(0), Rational(-1), Rational(0), Rational(1)});
    const auto iv = isolate_real_roots(c);
    REQUIRE(iv.size() == 3);
    CHECK(iv[1].exact());
    CHECK(iv[1].lo == 0);
    const auto r = refine(p, isolate_real_roots(p)[1], Rational(1, 1000000));
    CHECK(r.width() <= Rational(1, 1000000));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
  }

  TEST_CASE("gcd and squarefree part") {
    const UPoly a = UPoly::x_minus(1) * UPoly::x_minus(1) * UPoly::x_minus(2);
    CHECK(squarefree_part(a) == (UPoly::x_minus(1) * UPoly::x_minus(2)).monic());
    CHECK(gcd(a, UPoly::x_minus(1) * UPoly::x_minus(3)) == UPoly::x_minus(1));
    const auto [q, r] = divmod(a, UPoly::x_minus(2));
    CHECK(r.is_zero());
    CHECK(q * UPoly::x_minus(2) == a);
  }
}

TEST_SUITE("branch") {
  TEST_CASE("y^2 - x on [-1, 4]") {
    const auto pr = problem("y^2 - x", -1, 4);
    CHECK(critical_polynomial(pr.p).degree() == 1);
    const auto cells = cell_partition(pr);
    std::vector<std::size_t> counts;
    for (const auto& c : cells) counts.push_back(c.count);
    // points -1, 0, 4 and the open intervals between them
    CHECK(counts == std::vector<std::size_t>{0, 0, 1, 2, 2});
    CHECK(cells[2].kind == Cell1D::point);
    CHECK(cells[2].left.is_rational());

    const auto h = identify_branch(pr, cells, Rational(1), Rational(9, 10), Rational(11, 10));
    CHECK(h.branch == 2);
    CHECK(h.cell == 3);

    const Rational w("1/10000000000");
    const auto iv = evaluate_branch(pr, cells, h, Rational(2), w);
    CHECK(iv.width() <= w);
    const std::string sqrt2 = "1.4142135623730950488016887242096980785696718753769";
    mpf_class lo(iv.lo, 256), hi(iv.hi, 256), ref(sqrt2, 256), tol("1e-10", 256);
    CHECK(lo <= ref);
    CHECK(ref <= hi);
    CHECK(abs(ref - lo) < tol);
    CHECK(abs(hi - ref) < tol);
  }

  TEST_CASE("continuity sweep stays on one branch inside each cell") {
    const auto pr = problem("y^2 - x", -1, 4);
    const auto cells = cell_partition(pr);
    std::mt19937_64 rng(0x5eed5eed);
    std::uniform_int_distribution<long> pick(1, 39999);
    for (int i = 0; i < 1000; ++i) {
      const Rational x(pick(rng), 10000);  // inside (0, 4)
      const auto c = cell_of(cells, x);
      REQUIRE(c == 3);
      for (std::size_t j = 1; j <= 2; ++j) {
        const auto iv = evaluate_branch(pr, cells, {c, j}, x, Rational(1, 1000));
        // branch 1 is the negative root, branch 2 the positive one
        CHECK((j == 1 ? iv.hi <= 0 : iv.lo >= 0));
        CHECK(iv.lo * iv.lo <= x + Rational(1, 100));
      }
    }
  }

  TEST_CASE("two branches crossing at the origin") {
    const auto pr = problem("y^2 - x^2 - x^3", -1, 1);
    const auto cells = cell_partition(pr);
    std::vector<std::size_t> counts;
    for (const auto& c : cells) counts.push_back(c.count);
    CHECK(counts == std::vector<std::size_t>{1, 2, 1, 2, 2});
  }

  TEST_CASE("errors") {
    const auto pr = problem("y^2 - x", -1, 4);
    const auto cells = cell_partition(pr);
    CHECK(error_of([&] { identify_branch(pr, cells, Rational(1), Rational(-2), Rational(2)); }) ==
          ErrorCode::ambiguous_sample);
    CHECK(error_of([&] { evaluate_branch(pr, cells, {3, 2}, Rational(-1, 2), Rational(1, 10)); }) ==
          ErrorCode::outside_cell);
    CHECK(error_of([&] { evaluate_branch(pr, cells, {3, 5}, Rational(1), Rational(1, 10)); }) ==
          ErrorCode::invalid_input);
    CHECK(error_of([] { validate_problem(problem("(y - x)^2", 0, 1)); }) == ErrorCode::invalid_input);
    CHECK(error_of([] { validate_problem(problem("y - x", 2, 1)); }) == ErrorCode::invalid_input);
    CHECK(error_of([] { isolate_roots(parse_polynomial("x*y", kXY), Rational(0)); }) == ErrorCode::degenerate_fiber);
  }
  TEST_CASE("cell counts agree with direct Sturm counts on random fibers") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3), dy(1, 4), pick(-2000, 2000);
    int fibers = 0;
    while (fibers < 1000) {
      std::string p = "y^" + std::to_string(dy(rng));
      for (int i = 0; i < 6; ++i) {
        const int c = coef(rng);
        if (c == 0) continue;
        p += " + (" + std::to_string(c) + ")*x^" + std::to_string(i % 3) + "*y^" + std::to_string(i % 4);
      }
      const auto pr = problem(p, -2, 2);
      try {
        validate_problem(pr);
      } catch (const Error&) {
        continue;
      }
      const auto cells = cell_partition(pr);
      for (int k = 0; k < 20; ++k, ++fibers) {
        const Rational x(pick(rng), 1000);
        const auto c = cell_of(cells, x);
        REQUIRE(c < cells.size());
        CHECK(cells[c].count == isolate_real_roots(squarefree_part(fiber(pr.p, x))).size());
      }
    }
  }

  TEST_CASE("evaluated intervals isolate a root and shrink with the width") {
    const auto pr = problem("y^3 - 2*y - x", -1, 1);
    const auto cells = cell_partition(pr);
    const Rational x(1, 3);
    const auto c = cell_of(cells, x);
    REQUIRE(c < cells.size());
    for (std::size_t j = 1; j <= cells[c].count; ++j) {
      Rational last = 1;
      for (int k = 1; k <= 12; ++k) {
        Rational w(1, 1);
        for (int i = 0; i < k; ++i) w /= 10;
        const auto iv = evaluate_branch(pr, cells, {c, j}, x, w);
        const auto f = fiber(pr.p, x);
        if (iv.exact()) {
          CHECK(f(iv.lo) == 0);
          break;
        }
        CHECK(sgn(f(iv.lo)) * sgn(f(iv.hi)) < 0);
        CHECK(iv.width() < last);
        last = iv.width();
        const auto back = identify_branch(pr, cells, x, iv.lo, iv.hi);
        CHECK(back.cell == c);
        CHECK(back.branch == j);
      }
    }
  }
}
