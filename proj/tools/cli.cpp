#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cbwt/builder.hpp"
#include "cbwt/errors.hpp"
#include "cbwt/locator.hpp"
#include "cbwt/oracle.hpp"
#include "cbwt/serialize.hpp"

namespace cbwt::cli {

namespace {

using Text = std::vector<std::uint32_t>;

struct Failure {
  int code;
  std::string message;
};

constexpr std::uint64_t kMaxToken = 2147483647;

// Tokens of one line; throws Failure with a 1-based column on bad input.
Text parse_tokens(const std::string& line, bool chars, const std::string& where) {
  Text out;
  if (chars) {
    for (unsigned char ch : line) {
      if (ch != '\r') out.push_back(ch);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j || v > kMaxToken) {
      throw Failure{kUsage, where + "column " + std::to_string(i + 1) + ": bad token '" + line.substr(i, j - i) + "'"};
    }
    out.push_back(static_cast<std::uint32_t>(v));
    i = j;
  }
  return out;
}

std::vector<Text> read_texts(const std::string& path, bool chars) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "cannot read " + path};
  std::vector<Text> texts;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    texts.push_back(parse_tokens(line, chars, path + ":" + std::to_string(no) + ": "));
  }
  if (in.bad()) throw Failure{kIo, "error reading " + path};
  if (texts.empty()) throw Failure{kUsage, "no texts"};
  return texts;
}

std::ifstream open_index(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "cannot read " + path};
  return in;
}

LoadedIndex load(const std::string& path) {
  auto in = open_index(path);
  return read_index(in);
}

void save(const std::string& path, const CbwtIndex& index, const SampleStore& samples) {
  std::ostringstream buf;
  write_index(buf, index, samples);
  std::ofstream out(path, std::ios::trunc);
  if (!out || !(out << buf.str()) || !out.flush()) throw Failure{kIo, "cannot write " + path};
}

std::string pi_token(PiValue p) { return to_token(p); }

int cmd_build(const std::string& input, const std::string& output, std::size_t rate, bool chars, std::ostream& out) {
  const auto texts = read_texts(input, chars);
  const CbwtIndex index = build_collection(texts);
  save(output, index, attach_samples(index, rate));
  out << "indexed d=" << texts.size() << " n=" << index.size() << '\n';
  return kOk;
}

int cmd_count(const std::string& path, const std::string& pattern, bool chars, std::ostream& out) {
  const Text p = parse_tokens(pattern, chars, "pattern ");
  const auto loaded = load(path);
  out << count(loaded.index, p) << '\n';
  return kOk;
}

int cmd_locate(const std::string& path, const std::string& pattern, bool chars, std::ostream& out) {
  const Text p = parse_tokens(pattern, chars, "pattern ");
  const auto loaded = load(path);
  for (const auto& occ : locate(loaded.index, loaded.samples, p)) out << occ.text_id << ':' << occ.offset << '\n';
  return kOk;
}

int cmd_add(const std::string& path, const std::string& text, bool chars, std::ostream& out) {
  const Text t = parse_tokens(text, chars, "text ");
  if (t.empty()) throw Failure{kUsage, "empty text"};
  auto loaded = load(path);
  std::uint64_t id = 0;
  for (const auto& m : loaded.index.texts()) id = std::max(id, m.id);
  extend_with_text(loaded.index, t, id + 1);
  save(path, loaded.index, attach_samples(loaded.index, loaded.samples.rate));
  out << "added id=" << id + 1 << " n=" << loaded.index.size() << '\n';
  return kOk;
}

template <class T, class F>
std::string first_difference(const char* name, const std::vector<T>& want, const std::vector<T>& got, F fmt) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!(want[i] == got[i])) {
      return std::string(name) + " differs at position " + std::to_string(i + 1) + ": expected " + fmt(want[i]) +
             ", found " + fmt(got[i]);
    }
  }
  return "";
}

int cmd_verify(const std::string& path, const std::string& source, bool chars, std::ostream& out, std::ostream& err) {
  const auto texts = read_texts(source, chars);
  auto in = open_index(path);
  const IndexFile file = parse_index_file(in);
  if (file.n > oracle::kMaxSize) throw Failure{kLimit, "too large for oracle verification"};

  std::vector<SymbolString> stored;
  for (const auto& [id, len] : file.texts) {
    if (id < 1 || id > texts.size() || texts[id - 1].size() != len) {
      err << "text " << id << " does not match the source\n";
      return kMismatch;
    }
    stored.push_back(to_symbols(texts[id - 1]));
  }
  if (stored.size() != texts.size()) {
    err << "index holds " << stored.size() << " texts, source has " << texts.size() << '\n';
    return kMismatch;
  }
  const auto brute = oracle::brute_index(oracle::TextCollection(stored));
  const auto num = [](std::size_t v) { return std::to_string(v); };
  for (const auto& diff : {first_difference("FT", brute.ft, file.ft, pi_token),
                           first_difference("LT", brute.lt, file.lt, pi_token),
                           first_difference("LCP", brute.lcp, file.lcp, num)}) {
    if (!diff.empty()) {
      err << diff << '\n';
      return kMismatch;
    }
  }
  const auto loaded = load_index(file);
  for (std::size_t i = 1; i <= file.n; ++i) {
    const std::size_t got = locate_rank(loaded.index, loaded.samples, i);
    if (got != brute.ca.ca[i - 1]) {
      err << "samples locate rank " << i << " at conjugate " << got << ", expected " << brute.ca.ca[i - 1] << '\n';
      return kMismatch;
    }
  }
  out << "ok n=" << file.n << '\n';
  return kOk;
}

int cmd_dump(const std::string& path, std::ostream& out) {
  const auto loaded = load(path);
  const auto& idx = loaded.index;
  out << "rank FT LT LCP\n";
  for (std::size_t i = 1; i <= idx.size(); ++i) {
    out << i << ' ' << to_token(idx.ft_at(i)) << ' ' << to_token(idx.lt_at(i)) << ' ' << idx.lcp_at(i) << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular Cartesian-tree BWT index over integer texts"};
  app.require_subcommand(1);
  bool chars = false;
  app.add_flag("--chars", chars, "Read each byte of a line as one symbol");

  std::string input, output, index_path, pattern, text, source;
  std::size_t rate = 0;

  auto* build = app.add_subcommand("build", "Index a text file, one text per line");
  build->add_option("input", input, "Text file")->required();
  build->add_option("output", output, "Index file to write")->required();
  build->add_option("--sample-rate", rate, "Locate sampling stride (default ceil(lg n))")->check(CLI::PositiveNumber);

  auto* cnt = app.add_subcommand("count", "Count pattern occurrences");
  cnt->add_option("index", index_path)->required();
  cnt->add_option("--pattern,-p", pattern, "Pattern tokens")->required();

  auto* loc = app.add_subcommand("locate", "List text:offset of each occurrence");
  loc->add_option("index", index_path)->required();
  loc->add_option("--pattern,-p", pattern, "Pattern tokens")->required();

  auto* add = app.add_subcommand("add", "Extend an index by one text");
  add->add_option("index", index_path)->required();
  add->add_option("--text,-t", text, "Text tokens")->required();

  auto* verify = app.add_subcommand("verify", "Check an index against brute force (n <= 64)");
  verify->add_option("index", index_path)->required();
  verify->add_option("--source,-s", source, "Text file the index was built from")->required();

  auto* dump = app.add_subcommand("dump", "Print FT, LT and LCP per rank");
  dump->add_option("index", index_path)->required();

  for (auto* sub : {build, cnt, loc, add, verify}) sub->add_flag("--chars", chars, "Read each byte as one symbol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*build) return cmd_build(input, output, rate, chars, out);
    if (*cnt) return cmd_count(index_path, pattern, chars, out);
    if (*loc) return cmd_locate(index_path, pattern, chars, out);
    if (*add) return cmd_add(index_path, text, chars, out);
    if (*verify) return cmd_verify(index_path, source, chars, out, err);
    return cmd_dump(index_path, out);
  } catch (const Failure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const FormatError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cbwt::cli
