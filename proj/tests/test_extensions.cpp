#include <random>

#include "doctest.h"
#include "jordkit/error.hpp"
#include "jordkit/extensions.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace jordkit;
using namespace jordkit::ext;
using intlin::IntMatrix;

namespace {

const IntMatrix kPlastic = intlin::companion(intlin::IntPoly({-1, -1, 0, 1}));

IntMatrix random_unimodular2(std::mt19937_64& rng, bool allow_eigenvalue_one = false) {
  std::uniform_int_distribution<std::int64_t> e(-3, 3);
  while (true) {
    IntMatrix m{{e(rng), e(rng)}, {e(rng), e(rng)}};
    const std::int64_t d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (d != 1 && d != -1) continue;
    // charpoly(1) = 1 - tr + det
    if (!allow_eigenvalue_one && 1 - (m(0, 0) + m(1, 1)) + d == 0) continue;
    return m;
  }
}

IntMatrix random_unimodular3(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> e(-2, 2);
  while (true) {
    IntMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = e(rng);
    const std::int64_t d = oracle::leibniz_det(m);
    if (d == 1 || d == -1) return m;
  }
}

std::vector<WangGroupDesc> sample_descs(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pr(-3, 3), rr(1, 4);
  std::vector<WangGroupDesc> out;
  for (int i = 0; i < 4; ++i) {
    out.push_back(make_desc(WangKind::HeisSemidirect, rr(rng), random_unimodular2(rng),
                            {pr(rng), pr(rng)}));
    out.push_back(make_desc(WangKind::LatticeSemidirect, 1, random_unimodular3(rng)));
    out.push_back(make_desc(WangKind::HeisDirect, rr(rng), std::nullopt));
  }
  return out;
}

Fiber random_fiber(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<std::int64_t> e(-bound, bound);
  return {e(rng), e(rng), e(rng)};
}

WangElem random_elem(std::mt19937_64& rng, int bound, int kbound) {
  std::uniform_int_distribution<std::int64_t> k(-kbound, kbound);
  return {random_fiber(rng, bound), k(rng)};
}

// gamma acting on d1^a d2^b d3^e, evaluated letter by letter from the
// generator images of the defining relations.
heis::HeisElem phi_by_letters(const WangGroupDesc& d, const heis::HeisElem& h) {
  const heis::HeisParams hp(d.r());
  const IntMatrix& m = *d.matrix();
  const heis::HeisElem img[3] = {
      heis::word(hp, m(0, 0), m(1, 0), d.twist()[0]),
      heis::word(hp, m(0, 1), m(1, 1), d.twist()[1]),
      {0, 0, d.det()},
  };
  const std::int64_t exps[3] = {h.a, h.b, h.c - d.r() * h.a * h.b};
  heis::HeisElem acc{};
  for (int i = 0; i < 3; ++i) {
    const heis::HeisElem step = exps[i] >= 0 ? img[i] : heis::inv(hp, img[i]);
    for (std::int64_t j = 0; j < std::abs(exps[i]); ++j) acc = heis::mul(hp, acc, step);
  }
  return acc;
}

Fiber fib(const heis::HeisElem& x) { return {x.a, x.b, x.c}; }

}  // namespace

TEST_CASE("make_desc examples and errors") {
  auto d = make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{2, 1}, {1, 1}}, {0, 0});
  CHECK(d.det() == 1);
  auto l = make_desc(WangKind::LatticeSemidirect, 1, kPlastic);
  CHECK(l.det() == 1);
  CHECK_THROWS_AS_CODE(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{2, 0}, {0, 2}}),
                       Errc::NotUnimodular);
  CHECK_THROWS_AS_CODE(make_desc(WangKind::HeisSemidirect, 1, kPlastic), Errc::ShapeMismatch);
  CHECK_THROWS_AS_CODE(make_desc(WangKind::LatticeSemidirect, 1, std::nullopt), Errc::ShapeMismatch);
  CHECK_THROWS_AS_CODE(make_desc(WangKind::HeisDirect, 1, IntMatrix{{1, 0}, {0, 1}}),
                       Errc::ShapeMismatch);
  CHECK_THROWS_AS_CODE(make_desc(WangKind::HeisDirect, 0, std::nullopt), Errc::InvalidArgument);
  CHECK(parse_kind("heis_semidirect") == WangKind::HeisSemidirect);
  CHECK_THROWS_AS_CODE(parse_kind("torus"), Errc::ParseError);
}

TEST_CASE("gamma_action examples") {
  for (auto m : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{0, -1}, {1, 0}}}) {
    auto d = make_desc(WangKind::HeisSemidirect, 2, m, {3, -1});
    CHECK(gamma_action(d, {0, 0, 1}, 1) == Fiber{0, 0, d.det()});
  }
  auto direct = make_desc(WangKind::HeisDirect, 3, std::nullopt);
  CHECK(gamma_action(direct, {4, -2, 7}, 5) == Fiber{4, -2, 7});
  auto l = make_desc(WangKind::LatticeSemidirect, 1, kPlastic);
  CHECK(gamma_action(l, {1, 0, 0}, 1) == Fiber{kPlastic(0, 0), kPlastic(1, 0), kPlastic(2, 0)});
}

TEST_CASE("wang_mul examples") {
  auto d = make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {1, 0}});
  REQUIRE(d.det() == -1);
  CHECK(wang_mul(d, {{0, 0, 0}, 1}, {{0, 0, 1}, 0}) == WangElem{{0, 0, -1}, 1});
  auto d2 = make_desc(WangKind::HeisSemidirect, 3, IntMatrix{{2, 1}, {1, 1}}, {1, 2});
  const Fiber h{1, 2, 3}, h2{-1, 4, 0};
  CHECK(wang_mul(d2, {h, 0}, {h2, 0}) == WangElem{fiber_mul(d2, h, h2), 0});
  auto direct = make_desc(WangKind::HeisDirect, 1, std::nullopt);
  CHECK(wang_mul(direct, {{1, 0, 0}, 1}, {{0, 1, 0}, 0}) == WangElem{{1, 1, 1}, 1});
}

TEST_CASE("heisenberg action matches letter-by-letter evaluation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto d = make_desc(WangKind::HeisSemidirect, 1 + t % 4, random_unimodular2(rng, true),
                       {static_cast<std::int64_t>(t % 7) - 3, static_cast<std::int64_t>(t % 5) - 2});
    for (int s = 0; s < 25; ++s) {
      const Fiber h = random_fiber(rng, 4);
      CHECK(gamma_action(d, h, 1) == fib(phi_by_letters(d, {h[0], h[1], h[2]})));
      CHECK(gamma_action(d, gamma_action(d, h, -1), 1) == h);
    }
  }
}

TEST_CASE("lattice action matches repeated matrix products") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto d = make_desc(WangKind::LatticeSemidirect, 1, random_unimodular3(rng));
    const Fiber h = random_fiber(rng, 5);
    std::vector<std::int64_t> v(h.begin(), h.end());
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::int64_t> w(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w[static_cast<std::size_t>(i)] += (*d.matrix())(i, j) * v[static_cast<std::size_t>(j)];
      v = w;
      CHECK(gamma_action(d, h, k) == Fiber{v[0], v[1], v[2]});
    }
  }
}

TEST_CASE("gamma_action is a homomorphism for every kind") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> kd(-3, 3);
  for (const auto& d : sample_descs(rng))
    for (int t = 0; t < 1000; ++t) {
      const Fiber x = random_fiber(rng, 5), y = random_fiber(rng, 5);
      const std::int64_t k = kd(rng);
      REQUIRE(gamma_action(d, fiber_mul(d, x, y), k) ==
              fiber_mul(d, gamma_action(d, x, k), gamma_action(d, y, k)));
    }
}

TEST_CASE("iteration law for gamma powers") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::int64_t> kd(-3, 3);
  for (const auto& d : sample_descs(rng))
    for (int t = 0; t < 300; ++t) {
      const Fiber h = random_fiber(rng, 4);
      const std::int64_t k1 = kd(rng), k2 = kd(rng);
      REQUIRE(gamma_action(d, h, k1 + k2) == gamma_action(d, gamma_action(d, h, k2), k1));
    }
}

TEST_CASE("wang_mul is associative with inverses and powers") {
  std::mt19937_64 rng(15);
  for (const auto& d : sample_descs(rng)) {
    for (int t = 0; t < 10000 / 12 + 1; ++t) {
      const WangElem u = random_elem(rng, 4, 2), v = random_elem(rng, 4, 2), w = random_elem(rng, 4, 2);
      REQUIRE(wang_mul(d, wang_mul(d, u, v), w) == wang_mul(d, u, wang_mul(d, v, w)));
      REQUIRE(wang_mul(d, u, wang_inv(d, u)) == WangElem{});
      REQUIRE(wang_mul(d, wang_inv(d, u), u) == WangElem{});
    }
    const WangElem u = random_elem(rng, 2, 1);
    WangElem acc{};
    for (int n = 0; n <= 4; ++n) {
      CHECK(wang_pow(d, u, n) == acc);
      CHECK(wang_pow(d, u, -n) == wang_inv(d, acc));
      acc = wang_mul(d, acc, u);
    }
  }
}

TEST_CASE("conjugating d3 by gamma gives d3^det") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<std::int64_t> pr(-50, 50), rr(1, 6);
  for (int t = 0; t < 50; ++t) {
    auto d = make_desc(WangKind::HeisSemidirect, rr(rng), random_unimodular2(rng, true), {pr(rng), pr(rng)});
    const WangElem g{{0, 0, 0}, 1};
    const WangElem conj = wang_mul(d, wang_mul(d, g, {{0, 0, 1}, 0}), wang_inv(d, g));
    CHECK(conj == WangElem{{0, 0, d.det()}, 0});
  }
}

TEST_CASE("center_description examples") {
  auto plus = center_description(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(plus.trivial);
  CHECK(plus.generators == std::vector<WangElem>{{{0, 0, 1}, 0}});
  CHECK(center_description(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {1, 0}})).trivial);
  auto direct = center_description(make_desc(WangKind::HeisDirect, 1, std::nullopt));
  CHECK(direct.generators == std::vector<WangElem>{{{0, 0, 1}, 0}, {{0, 0, 0}, 1}});
  CHECK(center_description(make_desc(WangKind::LatticeSemidirect, 1, kPlastic)).trivial);
  CHECK_THROWS_AS_CODE(
      center_description(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {0, 1}})),
      Errc::EigenvalueOnePresent);
  // -Id has order 2, so gamma^2 is central.
  auto neg = center_description(make_desc(WangKind::HeisSemidirect, 2, IntMatrix{{-1, 0}, {0, -1}}));
  CHECK(neg.generators == std::vector<WangElem>{{{0, 0, 1}, 0}, {{0, 0, 0}, 2}});
}

TEST_CASE("center_description agrees with bounded search") {
  std::mt19937_64 rng(17);
  std::vector<WangGroupDesc> descs;
  for (const auto& d : sample_descs(rng))
    if (d.kind() == WangKind::HeisDirect || intlin::charpoly(*d.matrix()).eval(1) != 0) descs.push_back(d);
  descs.push_back(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {1, 0}}, {2, -1}));
  descs.push_back(make_desc(WangKind::LatticeSemidirect, 1, kPlastic));
  descs.push_back(make_desc(WangKind::HeisSemidirect, 2, IntMatrix{{0, -1}, {1, 0}}, {1, 0}));
  for (const auto& d : descs) {
    const auto center = center_description(d);
    const auto gens = generators(d);
    const auto central = [&](const WangElem& u) {
      return std::all_of(gens.begin(), gens.end(),
                         [&](const WangElem& g) { return wang_mul(d, u, g) == wang_mul(d, g, u); });
    };
    for (const auto& z : center.generators) CHECK(central(z));
    if (!center.trivial) continue;
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -2; b <= 2; ++b)
        for (std::int64_t c = -2; c <= 2; ++c)
          for (std::int64_t k = -2; k <= 2; ++k) {
            const WangElem u{{a, b, c}, k};
            if (u == WangElem{}) continue;
            CHECK_FALSE(central(u));
          }
  }
}

TEST_CASE("commutator_image examples") {
  CHECK(commutator_image(IntMatrix{{2, 1}, {1, 1}}).index == 1);
  CHECK(commutator_image(IntMatrix{{3, 2}, {1, 1}}).index == 2);
  CHECK(commutator_image(kPlastic).index == 1);
  CHECK_THROWS_AS_CODE(commutator_image(IntMatrix{{1, 1}, {0, 1}}), Errc::EigenvalueOnePresent);
}

TEST_CASE("commutator image is spanned by the commutators [gamma, h]") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 60; ++t) {
    auto d = make_desc(WangKind::HeisSemidirect, 1 + t % 3, random_unimodular2(rng), {1, -1});
    const auto img = commutator_image(*d.matrix());
    CHECK(oracle::is_row_hnf(img.basis));
    CHECK(std::abs(oracle::leibniz_det(img.basis)) == img.index);
    // Z^2 parts of [gamma, h] land in the image, and so do the basis rows.
    for (int s = 0; s < 20; ++s) {
      const WangElem h{random_fiber(rng, 6), 0};
      const WangElem c = wang_commutator(d, {{0, 0, 0}, 1}, h);
      CHECK(c.k == 0);
      CHECK(in_commutator_image(d, c.h));
    }
    for (int i = 0; i < 2; ++i) CHECK(in_commutator_image(d, {img.basis(i, 0), img.basis(i, 1), 0}));
    // The image has index |det(M - Id)|: count residues in a box.
    std::int64_t inside = 0;
    const std::int64_t side = img.index;
    for (std::int64_t a = 0; a < side; ++a)
      for (std::int64_t b = 0; b < side; ++b) inside += in_commutator_image(d, {a, b, 0});
    CHECK(inside * img.index == side * side);
  }
}

TEST_CASE("classify_inoue trichotomy") {
  auto sm = classify_inoue(make_desc(WangKind::LatticeSemidirect, 1, kPlastic));
  CHECK(sm.label == InoueLabel::SM);
  CHECK(sm.center_trivial == true);
  auto sp = classify_inoue(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{2, 1}, {1, 1}}));
  CHECK(sp.label == InoueLabel::SPlus);
  CHECK(sp.center_trivial == false);
  auto sn = classify_inoue(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {1, 0}}));
  CHECK(sn.label == InoueLabel::SMinus);
  CHECK(sn.center_trivial == true);
  auto rot = classify_inoue(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{0, -1}, {1, 0}}));
  CHECK(rot.label == InoueLabel::NotInoue);
  CHECK(rot.failed_condition.find("roots of unity") != std::string::npos);
  auto one = classify_inoue(make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {0, 1}}));
  CHECK(one.label == InoueLabel::NotInoue);
  CHECK(one.failed_condition.find("eigenvalue 1") != std::string::npos);
  CHECK(classify_inoue(make_desc(WangKind::HeisDirect, 2, std::nullopt)).label == InoueLabel::NotInoue);
  // Three real eigenvalues: x^3 - 4x - 1 has all roots real.
  auto real3 = classify_inoue(
      make_desc(WangKind::LatticeSemidirect, 1, intlin::companion(intlin::IntPoly({-1, -4, 0, 1}))));
  CHECK(real3.label == InoueLabel::NotInoue);
  CHECK(to_string(InoueLabel::SMinus) == "S_MINUS");
}

TEST_CASE("classify_inoue matches numerically computed eigenvalues") {
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c)
        for (std::int64_t e = -3; e <= 3; ++e) {
          const IntMatrix m{{a, b}, {c, e}};
          const std::int64_t det = a * e - b * c;
          if (det != 1 && det != -1) continue;
          const auto res = classify_inoue(make_desc(WangKind::HeisSemidirect, 1, m));
          const std::int64_t tr = a + e;
          // Real, and off the unit circle: tr^2 - 4 det > 0 and no root +-1.
          const bool hyperbolic = tr * tr - 4 * det > 0 && 1 - tr + det != 0 && 1 + tr + det != 0;
          const InoueLabel want = !hyperbolic ? InoueLabel::NotInoue
                                  : det == 1  ? InoueLabel::SPlus
                                              : InoueLabel::SMinus;
          CHECK(res.label == want);
        }
}

TEST_CASE("power_in_subgroup examples") {
  auto d = make_desc(WangKind::HeisSemidirect, 1, IntMatrix{{2, 1}, {1, 1}});
  const auto pred = [&](const Fiber& h) { return in_commutator_image(d, h); };
  CHECK(power_in_subgroup(d, {{1, 0, 0}, 0}, pred, 10) == 1);
  CHECK_FALSE(power_in_subgroup(d, {{0, 0, 0}, 1}, pred, 10).has_value());
  CHECK(power_in_subgroup(d, {}, pred, 10) == 1);
  CHECK_THROWS_AS_CODE(power_in_subgroup(d, {}, pred, 0), Errc::InvalidArgument);
}

TEST_CASE("every element of Gamma0 has a power in the commutator image") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    auto d = make_desc(WangKind::HeisSemidirect, 1 + t % 4, random_unimodular2(rng), {0, 1});
    const auto idx = commutator_image(*d.matrix()).index;
    const auto pred = [&](const Fiber& h) { return in_commutator_image(d, h); };
    for (int s = 0; s < 20; ++s) {
      const WangElem u{random_fiber(rng, 5), 0};
      const auto k = power_in_subgroup(d, u, pred, idx);
      REQUIRE(k.has_value());
      CHECK(idx % *k == 0);
    }
  }
  // x^3 + 2x - 1: |p(1)| = 2.
  auto l = make_desc(WangKind::LatticeSemidirect, 1, intlin::companion(intlin::IntPoly({-1, 2, 0, 1})));
  const auto pred = [&](const Fiber& h) { return in_commutator_image(l, h); };
  const auto idx = commutator_image(*l.matrix()).index;
  CHECK(idx == 2);
  for (const Fiber& e : {Fiber{1, 0, 0}, Fiber{0, 1, 0}, Fiber{0, 0, 1}})
    CHECK(power_in_subgroup(l, {e, 0}, pred, idx) == (pred(e) ? 1 : 2));
}

TEST_CASE("twisted_copy") {
  auto tc = twisted_copy(1, 1);
  CHECK(tc.relations_hold);
  CHECK(tc.normal);
  CHECK(tc.quotient_infinite_cyclic);
  CHECK(tc.projection_isomorphism);
  CHECK(tc.r_prime == 1);
  auto std0 = twisted_copy(2, 0);
  CHECK(std0.generators[0] == WangElem{{1, 0, 0}, 0});
  CHECK(twisted_copy(3, 2).r_prime == 3);
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t t = -3; t <= 3; ++t) {
      auto c = twisted_copy(r, t);
      CHECK(c.relations_hold);
      CHECK(c.normal);
      CHECK(c.r_prime == r);
    }
}

TEST_CASE("no bounded copy of Z^3 through an element with nonzero gamma exponent") {
  auto d = make_desc(WangKind::LatticeSemidirect, 1, kPlastic);
  std::vector<Fiber> box;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        if (a || b || c) box.push_back({a, b, c});
  for (const auto& h : box)
    for (std::int64_t k : {-2, -1, 1, 2}) {
      const WangElem u{h, k};
      for (const auto& x : box) CHECK_FALSE(wang_mul(d, u, {x, 0}) == wang_mul(d, {x, 0}, u));
    }
}
