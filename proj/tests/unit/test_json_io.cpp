#include <doctest.h>

#include <bit>
#include <random>

#include "diskwalk/errors.hpp"
#include "diskwalk/json_io.hpp"
#include "oracles.hpp"

using namespace diskwalk;

namespace {

bool bit_equal(const CoefficientTable& a, const CoefficientTable& b) {
  if (std::bit_cast<std::uint64_t>(a.alpha()) != std::bit_cast<std::uint64_t>(b.alpha())) return false;
  if (a.size() != b.size()) return false;
  for (const auto& [key, value] : a.entries()) {
    if (!b.contains(key.first, key.second)) return false;
    const complex w = b.at(key.first, key.second);
    if (std::bit_cast<std::uint64_t>(value.real()) != std::bit_cast<std::uint64_t>(w.real())) return false;
    if (std::bit_cast<std::uint64_t>(value.imag()) != std::bit_cast<std::uint64_t>(w.imag())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tables round trip bit for bit") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = oracle::random_table(rng, trial % 3, 8, 12, trial % 2 == 0);
    if (trial % 5 == 0) t.set(1, 1, {0.1 + 0.2, -1e-300});
    const auto text = to_json(t);
    CHECK(bit_equal(t, table_from_json(text)));
    CHECK(to_json(table_from_json(text)) == text);
  }
}

TEST_CASE("table layout") {
  CoefficientTable t(0.0);
  t.set(1, 0, 1.0);
  CHECK(to_json(t) == R"({"alpha":0.0,"entries":[{"m":1,"n":0,"re":1.0,"im":0.0}]})");
  t.set_support(SupportPattern::ray({1, 0}, {1, 0}));
  const auto back = table_from_json(to_json(t));
  REQUIRE(back.support());
  CHECK(back.support()->contains(7, 0));
  CHECK_FALSE(back.support()->contains(0, 0));
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(table_from_json("{"), format_error);
  CHECK_THROWS_AS(table_from_json("[]"), format_error);
  CHECK_THROWS_AS(table_from_json(R"({"entries":[]})"), format_error);
  CHECK_THROWS_AS(table_from_json(R"({"alpha":0,"entries":[{"m":0,"n":0,"re":1}]})"), format_error);
  CHECK_THROWS_AS(table_from_json(R"({"alpha":0,"entries":[{"m":-1,"n":0,"re":1,"im":0}]})"), format_error);
  CHECK_THROWS_AS(table_from_json(R"({"alpha":-2,"entries":[]})"), format_error);
  CHECK_THROWS_AS(table_from_json(R"({"alpha":0,"entries":[{"m":0,"n":0,"re":"x","im":0}]})"), format_error);
  CHECK_THROWS_AS(table_from_json(
                      R"({"alpha":0,"entries":[{"m":0,"n":0,"re":1,"im":0},{"m":0,"n":0,"re":2,"im":0}]})"),
                  format_error);
}

TEST_CASE("Montee results") {
  CoefficientTable t(0.0);
  t.set(2, 1, 0.5);
  const MonteeResult r{t, {0.25, 0.0}};
  const auto text = to_json(r);
  CHECK(text.find("constant_im") == std::string::npos);
  const auto back = montee_from_json(text);
  CHECK(back.constant == complex{0.25, 0.0});
  CHECK(bit_equal(back.table, t));
  CHECK(bit_equal(any_table_from_json(text), t));
  CHECK(bit_equal(any_table_from_json(to_json(t)), t));
  const auto complex_constant = montee_from_json(to_json(MonteeResult{t, {0.25, -0.5}}));
  CHECK(complex_constant.constant == complex{0.25, -0.5});
}

TEST_CASE("index sets and verdicts") {
  const IndexSet s({-3, 0, 4}, {{2, 5}, {-1, -3}});
  const auto back = index_set_from_json(to_json(s));
  CHECK(back.finite_part() == s.finite_part());
  CHECK(back.progressions().size() == 2);
  CHECK(index_set_from_json("{}").empty());
  CHECK_THROWS_AS(index_set_from_json(R"({"progressions":[{"offset":1,"step":0}]})"), format_error);
  CHECK_THROWS_AS(index_set_from_json("[1,2]"), format_error);

  const SpdVerdict verdicts[] = {RefutedAt{5, 0}, CertifiedExact{"divisor closure"}, CertifiedUpTo{64}};
  for (const auto& v : verdicts) CHECK(verdict_from_json(to_json(v)) == v);
  CHECK(to_json(SpdVerdict{RefutedAt{5, 0}}) == R"({"verdict":"RefutedAt","modulus":5,"residue":0})");
  CHECK_THROWS_AS(verdict_from_json(R"({"verdict":"Maybe"})"), format_error);
}

TEST_CASE("family specs") {
  const FamilySpec specs[] = {{ProductKernel{2, 1}, 3}, {PoissonSzego{0.5}, 2}, {Exponential{}, 4},
                              {Aktas{0.3}, 2}, {Horn{0.1, 0.05, 3, 4.0, 5.0}, 2}, {Lauricella{0.1, 0.2, 2, 0.4}, 3}};
  for (const auto& spec : specs) {
    const auto text = to_json(spec);
    const auto back = family_from_json(text);
    CHECK(back.q == spec.q);
    CHECK(back.name() == spec.name());
    CHECK(to_json(back) == text);
  }
  const auto defaults = family_from_json(R"({"family":"horn"})");
  CHECK(defaults.q == 2);
  CHECK(std::get<Horn>(defaults.variant).radius_y == 3.0);
  CHECK_THROWS_AS(family_from_json(R"({"family":"bessel"})"), format_error);
  CHECK_THROWS_AS(family_from_json(R"({"family":"aktas","params":{"tt":0.1}})"), format_error);
  CHECK_THROWS_AS(family_from_json(R"({"family":"product","params":{"m":1.5}})"), format_error);
}

TEST_CASE("PD reports") {
  PdReport r{false, {{0, 1}, {2, 3}}};
  CHECK(to_json(r) == R"({"positive_definite":false,"violations":[[0,1],[2,3]]})");
}
