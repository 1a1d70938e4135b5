#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "cbwt/builder.hpp"
#include "cbwt/encodings.hpp"
#include "cbwt/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"
#include "support/strings.hpp"

using namespace cbwt;
using namespace cbwt::testing;

namespace {

using Texts = std::vector<std::vector<std::uint32_t>>;

// Empty string when the index matches the brute-force arrays.
std::string diff_against_oracle(const CbwtIndex& idx, const oracle::TextCollection& tc) {
  const auto b = oracle::brute_index(tc);
  if (idx.size() != tc.size()) return "size";
  if (idx.ft_values() != b.ft) return "ft";
  if (idx.lt_values() != b.lt) return "lt";
  if (idx.lcp_values() != b.lcp) return "lcp";
  for (std::size_t i = 1; i <= idx.size(); ++i) {
    if (idx.lf(i) != b.lf[i - 1]) return "lf";
    if (idx.fl(i) != b.fl[i - 1]) return "fl";
  }
  return "";
}

// Collection in the order the builder stores it.
oracle::TextCollection stored_order(const Texts& texts) {
  Texts sorted = texts;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return oracle::TextCollection::from_values(sorted);
}

std::string as_string(const std::vector<std::uint32_t>& t) {
  std::string s;
  for (auto v : t) s += std::to_string(v) + ",";
  return s;
}

// Brute helpers of V against the collection.
ExtHelpers brute_helpers(const oracle::TextCollection& tc, const SymbolString& v) {
  const auto ca = oracle::brute_conjugate_array(tc);
  std::size_t cnt = 0;
  for (std::size_t i = 1; i <= tc.size(); ++i) {
    if (oracle::omega_compare(tc.conjugate(i), v) != std::weak_ordering::greater) ++cnt;
  }
  ExtHelpers h{cnt, -1, -1};
  if (cnt > 0) h.plcp = static_cast<std::int64_t>(lcp_count(tc.conjugate(ca.ca[cnt - 1]), v));
  if (cnt < tc.size()) h.slcp = static_cast<std::int64_t>(lcp_count(tc.conjugate(ca.ca[cnt]), v));
  return h;
}

}  // namespace

TEST_CASE("extend_front from the $ seed") {
  CbwtIndex idx = CbwtIndex::dollar_seed();
  idx.reserve_symbols(2);
  CHECK(extend_front(idx, PiValue::count(0), 1) == 2);
  CHECK(idx.ft_values() == pis("$0"));
  CHECK(idx.lt_values() == pis("0$"));
  CHECK(idx.lcp_values() == Sizes{0, 0});
}

TEST_CASE("build_single_dollar matches the oracle") {
  for (const char* r : {"$", "2$", "512$", "5363$", "4478$", "1111$", "73152$"}) {
    CAPTURE(r);
    const auto idx = build_single_dollar(syms(r));
    CHECK(diff_against_oracle(idx, oracle::TextCollection({syms(r)})) == "");
  }
  const auto seed = build_single_dollar(syms("$"));
  CHECK(seed.ft_values() == pis("$"));
  CHECK(seed.lt_values() == pis("$"));
  CHECK(seed.lcp_values() == Sizes{0});
  CHECK_THROWS_AS(build_single_dollar(syms("51$2")), std::invalid_argument);
  CHECK_THROWS_AS(build_single_dollar(syms("512")), std::invalid_argument);
  CHECK_THROWS_AS(build_single_dollar(syms("5$1$")), std::invalid_argument);
}

TEST_CASE("build_single_dollar on random texts") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    SymbolString r = rng.symbols(rng.uniform(1, 20), static_cast<std::uint32_t>(rng.uniform(1, 6)));
    r.push_back(Symbol::dollar());
    const auto idx = build_single_dollar(r);
    REQUIRE(diff_against_oracle(idx, oracle::TextCollection({r})) == "");
  }
}

TEST_CASE("build_single matches the oracle") {
  const auto seven = build_single(vals("7"));
  CHECK(seven.ft_values() == pis("1"));
  CHECK(seven.lt_values() == pis("1"));
  CHECK(seven.lcp_values() == Sizes{0});
  for (const char* t : {"512", "44", "4444", "5363", "4478", "73152", "121212", "3132"}) {
    CAPTURE(t);
    const auto idx = build_single(vals(t));
    const auto tc = oracle::TextCollection::from_values({vals(t)});
    CHECK(diff_against_oracle(idx, tc) == "");
    CHECK(idx.texts()[0].anchor == oracle::brute_conjugate_array(tc).ica[0]);
  }
  Rng rng(12);
  for (int it = 0; it < 300; ++it) {
    const auto t = rng.collection(1, 10, static_cast<std::uint32_t>(rng.uniform(1, 6)))[0];
    CAPTURE(as_string(t));
    const auto tc = oracle::TextCollection::from_values({t});
    const auto idx = build_single(t);
    REQUIRE(diff_against_oracle(idx, tc) == "");
    REQUIRE(idx.texts()[0].anchor == oracle::brute_conjugate_array(tc).ica[0]);
    REQUIRE(idx.texts()[0].root_length == primitive_root_length(rotational_pd_encode(to_symbols(t))));
  }
}

TEST_CASE("extension by 73152 reproduces the worked example") {
  CbwtIndex idx = build_collection(running_example_texts());
  ExtensionTrace trace;
  extend_with_text(idx, vals("73152"), 4, &trace);
  CHECK_FALSE(trace.omega_equal_case);

  // rotation -> (pi, cnt, plcp, slcp)
  const std::map<std::size_t, std::tuple<std::string, std::size_t, std::int64_t, std::int64_t>> expected_rows = {
      {20, {"$", 0, -1, 0}},  {19, {"0", 0, -1, 1}}, {18, {"0", 7, 1, 2}},   {17, {"2", 3, 1, 1}},
      {16, {"0", 9, 2, 2}},   {15, {"0", 11, 2, -1}}, {14, {"2", 5, 1, 1}},  {13, {"0", 11, 2, -1}},
      {12, {"3", 5, 1, 1}},   {11, {"0", 11, 2, -1}}, {10, {"0", 11, 2, -1}}, {9, {"2", 5, 1, 1}},
      {8, {"0", 11, 2, -1}},  {7, {"3", 5, 1, 1}},    {6, {"0", 11, 2, -1}},  {5, {"0", 11, 2, -1}},
      {4, {"2", 5, 1, 1}},    {3, {"0", 11, 2, -1}},  {2, {"3", 5, 1, 1}},    {1, {"0", 11, 2, -1}}};
  REQUIRE(trace.rows.size() == 20);
  for (const auto& row : trace.rows) {
    CAPTURE(row.rotation);
    const auto& [pi, cnt, plcp, slcp] = expected_rows.at(row.rotation);
    CHECK(to_token(row.pi) == pi);
    CHECK(row.helpers == ExtHelpers{cnt, plcp, slcp});
  }

  CHECK(trace.single_ft == pis("32000"));
  CHECK(trace.single_lt == pis("00032"));
  CHECK(trace.single_lcp == Sizes{0, 1, 1, 2, 2});
  CHECK(trace.lex_plcp == std::vector<std::int64_t>{1, 1, 2, 2, 2});
  CHECK(trace.lex_slcp == std::vector<std::int64_t>{1, 1, -1, -1, -1});

  CHECK(trace.merged_ft == pis("1222232110000000"));
  CHECK(trace.merged_lt == pis("0100000221122032"));
  // Row 9 follows the lcp definition (the worked example prints 1 there).
  CHECK(trace.merged_lcp == Sizes{0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2});
  const std::vector<bool> e = {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1};
  CHECK(trace.marks == e);

  CHECK(idx.marks().rangecount(1, idx.size(), 1, 1) == 0);
  const auto tc = oracle::TextCollection::from_values({vals("512"), vals("5363"), vals("4478"), vals("73152")});
  CHECK(diff_against_oracle(idx, tc) == "");
}

TEST_CASE("next_helper rows fed individually") {
  const CbwtIndex idx = build_collection(running_example_texts());
  CHECK(next_helper(idx, PiValue::dollar(), {3, 1, 1}) == ExtHelpers{0, -1, 0});
  CHECK(next_helper(idx, PiValue::count(0), {0, -1, 1}) == ExtHelpers{7, 1, 2});
  CHECK(next_helper(idx, PiValue::count(3), {11, 2, -1}) == ExtHelpers{5, 1, 1});
}

TEST_CASE("next_helper agrees with brute helpers on random inputs") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    const auto texts = rng.collection(3, 6, static_cast<std::uint32_t>(rng.uniform(1, 5)));
    const auto tc = stored_order(texts);
    const CbwtIndex idx = build_collection(texts);
    SymbolString v = rng.symbols(rng.uniform(1, 12), static_cast<std::uint32_t>(rng.uniform(1, 5)));
    v.push_back(Symbol::dollar());
    // Fold from the $-rotation down to v itself.
    ExtHelpers h{0, -1, 0};
    for (std::size_t j = v.size() - 1; j >= 1; --j) {
      SymbolString rot(v.begin() + static_cast<std::ptrdiff_t>(j - 1), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j - 1));
      h = next_helper(idx, pi_head(rot), h);
      REQUIRE(h == brute_helpers(tc, rot));
    }
  }
}

TEST_CASE("omega-equal extension") {
  CbwtIndex idx = build_single(vals("512"));
  ExtensionTrace trace;
  extend_with_text(idx, vals("125"), 2, &trace);
  CHECK(trace.omega_equal_case);
  CHECK(diff_against_oracle(idx, oracle::TextCollection::from_values({vals("512"), vals("125")})) == "");

  CbwtIndex twice = build_single(vals("21"));
  extend_with_text(twice, vals("2121"), 2);
  CHECK(diff_against_oracle(twice, oracle::TextCollection::from_values({vals("21"), vals("2121")})) == "");
}

TEST_CASE("build_collection goldens and order independence") {
  const auto idx = build_collection(running_example_texts());
  CHECK(idx.ft_values() == running_ft());
  CHECK(idx.lt_values() == running_lt());
  CHECK(idx.lcp_values() == kRunningLcp);
  for (std::size_t i = 1; i <= 11; ++i) {
    CHECK(idx.lf(i) == kRunningLf[i - 1]);
    CHECK(idx.fl(i) == kRunningFl[i - 1]);
  }
  const auto reversed = build_collection({vals("4478"), vals("5363"), vals("512")});
  CHECK(reversed.ft_values() == idx.ft_values());
  CHECK(reversed.lt_values() == idx.lt_values());
  CHECK(reversed.lcp_values() == idx.lcp_values());
  CHECK(reversed.texts()[0].id == 3);

  const auto seven = build_collection({vals("7")});
  CHECK(seven.ft_values() == pis("1"));
  CHECK(seven.lcp_values() == Sizes{0});
  CHECK_THROWS_AS(build_collection({}), std::invalid_argument);
  CHECK_THROWS_AS(build_collection({vals("1"), {}}), std::invalid_argument);
}

TEST_CASE("random collections match the oracle at every step") {
  Rng rng(14);
  for (int it = 0; it < 300; ++it) {
    const auto texts = rng.collection(4, 8, static_cast<std::uint32_t>(rng.uniform(1, 6)));
    Texts sorted = texts;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    CbwtIndex idx = build_single(sorted[0]);
    for (std::size_t k = 1; k <= sorted.size(); ++k) {
      const Texts prefix(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k));
      const auto tc = oracle::TextCollection::from_values(prefix);
      std::string desc;
      for (const auto& t : prefix) desc += as_string(t) + " ";
      CAPTURE(desc);
      REQUIRE(diff_against_oracle(idx, tc) == "");
      REQUIRE(idx.marks().size() == idx.size());
      REQUIRE(idx.marks().rangecount(1, idx.size(), 1, 1) == 0);
      const auto ca = oracle::brute_conjugate_array(tc);
      for (std::size_t t = 0; t < k; ++t) REQUIRE(idx.texts()[t].anchor == ca.ica[tc.start(t) - 1]);
      for (int q = 0; q < 5; ++q) {
        const auto p = rng.symbols(rng.uniform(1, 6), 3);
        REQUIRE(backward_search(idx, p).size() == oracle::brute_count(tc, p));
      }
      if (k == sorted.size()) break;

      // Either every rotation of the next text is omega-equal to an indexed
      // conjugate or none is.
      const auto& s = sorted[k];
      std::size_t equal = 0;
      for (std::size_t r = 0; r < s.size(); ++r) {
        SymbolString rot = to_symbols(s);
        std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(r), rot.end());
        for (std::size_t j = 1; j <= tc.size(); ++j) {
          if (oracle::omega_compare(tc.conjugate(j), rot) == std::weak_ordering::equivalent) {
            ++equal;
            break;
          }
        }
      }
      REQUIRE((equal == 0 || equal == s.size()));
      extend_with_text(idx, s, k + 1);
    }
  }
}

TEST_CASE("construction cost stays linear") {
  Rng rng(15);
  for (std::size_t len : {10u, 100u, 1000u, 5000u}) {
    SymbolString r = rng.symbols(len, 255);
    r.push_back(Symbol::dollar());
    dynseq_op_counter() = 0;
    const auto idx = build_single_dollar(r);
    CHECK(dynseq_op_counter() <= 64 * r.size());
    CHECK(idx.size() == r.size());
  }
}
