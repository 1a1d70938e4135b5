#include "cbwt/locator.hpp"

#include <algorithm>
#include <bit>

#include "cbwt/errors.hpp"

namespace cbwt {

std::size_t default_sample_rate(std::size_t n) {
  if (n <= 1) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

SampleStore attach_samples(const CbwtIndex& index, std::size_t rate) {
  const std::size_t n = index.size();
  SampleStore store;
  store.rate = rate == 0 ? default_sample_rate(n) : rate;
  std::vector<std::uint64_t> ids(n + 1, 0);
  std::vector<std::uint64_t> bits(n, 0);
  for (std::size_t k = 0; k < index.texts().size(); ++k) {
    const TextMeta& t = index.texts()[k];
    if (t.anchor == 0 || t.root_length == 0) throw std::logic_error("text without anchor");
    const std::size_t start = index.text_start(k);
    // Block b of omega-equal rotations starts at rank anchor + b with
    // conjugate start + b * root; fl walks the block's cycle forward.
    for (std::size_t b = 0; b < t.length / t.root_length; ++b) {
      std::size_t rank = t.anchor + b;
      for (std::size_t off = 0; off < t.root_length; ++off) {
        if (off % store.rate == 0) {
          bits[rank - 1] = 1;
          ids[rank] = start + b * t.root_length + off;
        }
        rank = index.fl(rank);
      }
    }
  }
  store.marked = DynSeq(1, bits);
  for (std::size_t i = 1; i <= n; ++i) {
    if (bits[i - 1]) store.values.push_back(ids[i]);
  }
  return store;
}

std::size_t locate_rank(const CbwtIndex& index, const SampleStore& store, std::size_t i) {
  const std::size_t cap = store.rate * std::max<std::size_t>(index.size(), 1);
  std::size_t steps = 0;
  while (store.marked.access(i) == 0) {
    i = index.lf(i);
    if (++steps > cap) throw std::logic_error("locate walk found no sample");
  }
  const std::size_t sampled = store.values[store.marked.rank(1, i) - 1];
  const std::size_t k = index.text_of(sampled);
  const std::size_t start = index.text_start(k);
  const std::size_t root = index.texts()[k].root_length;
  const std::size_t off = sampled - start;
  return start + off - off % root + (off % root + steps) % root;
}

std::vector<Occurrence> locate(const CbwtIndex& index, const SampleStore& store, std::span<const Symbol> p) {
  const ConjRange range = backward_search(index, p);
  std::vector<Occurrence> out;
  out.reserve(range.size());
  for (std::size_t i = range.lo; i <= range.hi; ++i) {
    const std::size_t j = locate_rank(index, store, i);
    const std::size_t k = index.text_of(j);
    out.push_back({index.texts()[k].id, j - index.text_start(k) + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Occurrence> locate(const CbwtIndex& index, const SampleStore& store, std::span<const std::uint32_t> p) {
  return locate(index, store, to_symbols(p));
}

}  // namespace cbwt
