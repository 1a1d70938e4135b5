#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cbwt/builder.hpp"
#include "cbwt/locator.hpp"
#include "cbwt/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace cbwt;
using namespace cbwt::testing;

namespace {

// Brute-force occurrences, with ids following the builder's stored order.
std::vector<Occurrence> brute_occurrences(const CbwtIndex& idx, const oracle::TextCollection& tc,
                                          std::span<const Symbol> p) {
  std::vector<Occurrence> out;
  for (auto j : oracle::brute_locate(tc, p)) {
    const auto [k, off] = tc.locate_conjugate(j);
    out.push_back({idx.texts()[k].id, off + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

oracle::TextCollection stored_collection(const CbwtIndex& idx, const std::vector<std::vector<std::uint32_t>>& texts) {
  std::vector<std::vector<std::uint32_t>> stored;
  for (const auto& t : idx.texts()) stored.push_back(texts[t.id - 1]);
  return oracle::TextCollection::from_values(stored);
}

}  // namespace

TEST_CASE("full sampling yields the conjugate array") {
  const auto idx = build_collection(running_example_texts());
  const auto store = attach_samples(idx, 1);
  CHECK(store.values == std::vector<std::uint64_t>(kRunningCa.begin(), kRunningCa.end()));
  for (std::size_t i = 1; i <= idx.size(); ++i) CHECK(locate_rank(idx, store, i) == kRunningCa[i - 1]);
}

TEST_CASE("locate on the running example") {
  const auto idx = build_collection(running_example_texts());
  for (std::size_t rate : {1u, 2u, 4u, 11u}) {
    CAPTURE(rate);
    const auto store = attach_samples(idx, rate);
    CHECK(locate(idx, store, vals("5634")) == std::vector<Occurrence>{{1, 3}, {3, 3}});
    CHECK(locate(idx, store, vals("643")).empty());
    CHECK(locate(idx, store, std::vector<std::uint32_t>{}).size() == 11);
  }
  const auto rate_n = attach_samples(idx, 11);
  // "5363" has root length 2 and so two LF cycles.
  CHECK(idx.texts()[1].root_length == 2);
  CHECK(rate_n.values.size() == 4);
  CHECK(default_sample_rate(11) == 4);
  CHECK(default_sample_rate(1) == 1);
  CHECK(default_sample_rate(16) == 4);
  CHECK(default_sample_rate(17) == 5);
  CHECK(attach_samples(idx).rate == 4);
}

TEST_CASE("locate matches the oracle on random collections") {
  Rng rng(21);
  for (int it = 0; it < 200; ++it) {
    const auto texts = rng.collection(4, 8, static_cast<std::uint32_t>(rng.uniform(1, 5)));
    const auto idx = build_collection(texts);
    const auto tc = stored_collection(idx, texts);
    for (std::size_t rate : {std::size_t{1}, std::size_t{2}, default_sample_rate(idx.size()), idx.size()}) {
      const auto store = attach_samples(idx, rate);
      for (int q = 0; q < 8; ++q) {
        const auto p = rng.symbols(rng.uniform(0, 5), 3);
        REQUIRE(locate(idx, store, p) == brute_occurrences(idx, tc, p));
      }
    }
  }
}

TEST_CASE("non-primitive texts keep one sample per cycle") {
  const std::vector<std::vector<std::uint32_t>> texts = {{2, 1, 2, 1, 2, 1}, {3, 3, 3, 3}};
  const auto idx = build_collection(texts);
  const auto store = attach_samples(idx, idx.size());
  // "3333" has four one-step cycles, "212121" three two-step cycles.
  CHECK(store.values.size() == 7);
  const auto tc = stored_collection(idx, texts);
  for (const char* p : {"", "1", "12", "21", "212", "33", "333333"}) {
    CAPTURE(p);
    CHECK(locate(idx, store, syms(p)) == brute_occurrences(idx, tc, syms(p)));
  }
}
