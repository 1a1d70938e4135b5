#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbwt/errors.hpp"
#include "cbwt/index.hpp"
#include "support/fixtures.hpp"
#include "support/from_oracle.hpp"
#include "support/random.hpp"

using namespace cbwt;
using namespace cbwt::testing;

TEST_CASE("lf and fl on the running example") {
  const CbwtIndex idx = index_from_oracle(running_example());
  CHECK(idx.lf(5) == 11);
  CHECK(idx.lf(2) == 1);
  CHECK(idx.fl(1) == 2);
  for (std::size_t i = 1; i <= idx.size(); ++i) {
    CHECK(idx.lf(i) == kRunningLf[i - 1]);
    CHECK(idx.fl(i) == kRunningFl[i - 1]);
  }
  CHECK_THROWS_AS(idx.lf(12), RangeError);
}

TEST_CASE("backward search steps for 375") {
  const CbwtIndex idx = index_from_oracle(running_example());
  ConjRange r = full_range(idx);
  CHECK(r == ConjRange{1, 11});
  r = crange_update(idx, 1, 0, r);
  CHECK(r == ConjRange{1, 11});
  r = crange_update(idx, 2, 0, r);
  CHECK(r == ConjRange{8, 11});
  r = crange_update(idx, 1, 2, r);
  CHECK(r == ConjRange{4, 5});
  CHECK(backward_search(idx, syms("375")) == ConjRange{4, 5});
}

TEST_CASE("count on the running example") {
  const CbwtIndex idx = index_from_oracle(running_example());
  CHECK(backward_search(idx, syms("5634")) == ConjRange{6, 7});
  CHECK(count(idx, vals("5634")) == 2);
  CHECK(count(idx, vals("643")) == 0);
  CHECK(backward_search(idx, SymbolString{}) == ConjRange{1, 11});
  CHECK(count(idx, std::vector<std::uint32_t>{}) == 11);
  CHECK_THROWS_AS(backward_search(idx, syms("3$")), std::invalid_argument);
  // Both 7844 and 251 open with inf 1 inf.
  CHECK(count(idx, vals("231")) == 2);
}

namespace {

std::vector<SymbolString> patterns_up_to(std::size_t m, std::uint32_t sigma) {
  std::vector<SymbolString> out{{}};
  std::vector<SymbolString> layer{{}};
  for (std::size_t len = 1; len <= m; ++len) {
    std::vector<SymbolString> next;
    for (const auto& p : layer) {
      for (std::uint32_t c = 0; c <= sigma; ++c) {
        auto q = p;
        q.push_back(Symbol::plain(c));
        next.push_back(q);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("backward search equals brute ranges on random collections") {
  Rng rng(3);
  const auto pats = patterns_up_to(4, 2);
  for (int t = 0; t < 150; ++t) {
    const auto tc = oracle::TextCollection::from_values(rng.collection(4, 8, 6));
    const CbwtIndex idx = index_from_oracle(tc);
    const auto before = idx.digest();
    auto check = [&](const SymbolString& p) {
      const auto [lo, hi] = oracle::brute_crange(tc, p);
      const ConjRange got = backward_search(idx, p);
      CHECK(got.size() == oracle::brute_count(tc, p));
      if (hi >= lo) CHECK(got == ConjRange{lo, hi});
    };
    for (const auto& p : pats) check(p);
    for (int k = 0; k < 40; ++k) check(rng.symbols(rng.uniform(1, 12), 6));
    CHECK(idx.digest() == before);
    for (std::size_t i = 1; i <= idx.size(); ++i) CHECK(idx.fl(idx.lf(i)) == i);
  }
}
