#include "cbwt/serialize.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cbwt/errors.hpp"

namespace cbwt {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> tokens(std::size_t expected) {
    std::string line;
    ++line_no_;
    if (!std::getline(in_, line)) fail("unexpected end of file");
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    if (expected != kAny && out.size() != expected) {
      fail("expected " + std::to_string(expected) + " tokens, found " + std::to_string(out.size()));
    }
    return out;
  }

  std::uint64_t number(const std::string& t) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail("bad number '" + t + "'");
    return v;
  }

  PiValue pi(const std::string& t) { return t == "$" ? PiValue::dollar() : PiValue::count(number(t)); }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("index file line " + std::to_string(line_no_) + ": " + msg);
  }

  static constexpr std::size_t kAny = static_cast<std::size_t>(-1);

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <class T, class F>
void write_line(std::ostream& out, const std::vector<T>& v, F fmt) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << fmt(v[i]);
  out << '\n';
}

}  // namespace

void write_index(std::ostream& out, const CbwtIndex& index, const SampleStore& samples) {
  out << "CBWT 1\n" << index.size() << ' ' << index.texts().size() << '\n';
  for (const auto& t : index.texts()) out << t.id << ' ' << t.length << '\n';
  write_line(out, index.ft_values(), [](PiValue p) { return to_token(p); });
  write_line(out, index.lt_values(), [](PiValue p) { return to_token(p); });
  write_line(out, index.lcp_values(), [](std::size_t v) { return v; });
  out << "SAMPLES " << samples.rate << ' ' << samples.values.size() << '\n';
  const auto bits = samples.marked.to_vector();
  std::size_t k = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out << i + 1 << ' ' << samples.values[k++] << '\n';
  }
}

IndexFile parse_index_file(std::istream& in) {
  LineReader r(in);
  IndexFile f;
  auto header = r.tokens(2);
  if (header[0] != "CBWT" || header[1] != "1") r.fail("not a CBWT 1 index");
  auto counts = r.tokens(2);
  f.n = r.number(counts[0]);
  const std::size_t d = r.number(counts[1]);
  if (d == 0 || f.n == 0) r.fail("empty index");
  std::size_t total = 0;
  for (std::size_t k = 0; k < d; ++k) {
    auto t = r.tokens(2);
    const std::size_t len = r.number(t[1]);
    if (len == 0) r.fail("empty text");
    f.texts.emplace_back(r.number(t[0]), len);
    total += len;
  }
  if (total != f.n) r.fail("text lengths do not add up to n");
  for (auto* arr : {&f.ft, &f.lt}) {
    for (const auto& t : r.tokens(f.n)) arr->push_back(r.pi(t));
  }
  for (const auto& t : r.tokens(f.n)) f.lcp.push_back(r.number(t));
  auto s = r.tokens(3);
  if (s[0] != "SAMPLES") r.fail("missing SAMPLES section");
  f.rate = r.number(s[1]);
  if (f.rate == 0) r.fail("sample rate must be positive");
  const std::size_t k = r.number(s[2]);
  if (k > f.n) r.fail("more samples than positions");
  for (std::size_t i = 0; i < k; ++i) {
    auto t = r.tokens(2);
    const std::size_t pos = r.number(t[0]), conj = r.number(t[1]);
    if (pos < 1 || pos > f.n || conj < 1 || conj > f.n) r.fail("sample out of range");
    if (!f.samples.empty() && pos <= f.samples.back().first) r.fail("samples not in lex order");
    f.samples.emplace_back(pos, conj);
  }
  r.expect_end();
  return f;
}

LoadedIndex load_index(const IndexFile& f) {
  std::vector<TextMeta> meta;
  for (const auto& [id, len] : f.texts) meta.push_back(TextMeta{id, len, 0, 0});
  std::vector<std::uint64_t> lcp(f.lcp.begin(), f.lcp.end());
  for (auto v : lcp) {
    if (v > f.n) throw FormatError("lcp value exceeds n");
  }
  for (const auto* arr : {&f.ft, &f.lt}) {
    for (auto p : *arr) {
      if (!p.is_dollar() && p.value() > f.n) throw FormatError("pi value exceeds n");
    }
  }
  LoadedIndex out{CbwtIndex(f.ft, f.lt, lcp, std::move(meta)), SampleStore{}};
  CbwtIndex& index = out.index;
  index.reserve_symbols(f.n);

  std::vector<std::uint64_t> bits(f.n, 0);
  for (const auto& [pos, conj] : f.samples) {
    bits[pos - 1] = 1;
    out.samples.values.push_back(conj);
  }
  out.samples.marked = DynSeq(1, bits);
  out.samples.rate = f.rate;

  for (std::size_t k = 0; k < index.texts().size(); ++k) {
    TextMeta& t = index.texts()[k];
    const std::size_t start = index.text_start(k);
    for (const auto& [pos, conj] : f.samples) {
      if (conj == start) t.anchor = pos;
    }
    if (t.anchor == 0) throw FormatError("no sample for the start of text " + std::to_string(t.id));
    // The LF cycle through the anchor has the root length.
    try {
      std::size_t i = index.lf(t.anchor), len = 1;
      while (i != t.anchor && len <= t.length) i = index.lf(i), ++len;
      if (len > t.length || t.length % len != 0) throw FormatError("inconsistent LF cycle");
      t.root_length = len;
    } catch (const NotFoundError&) {
      throw FormatError("FT and LT are not permutations of each other");
    }
  }
  return out;
}

LoadedIndex read_index(std::istream& in) { return load_index(parse_index_file(in)); }

}  // namespace cbwt
