#include "hofseq/words.hpp"

#include <stdexcept>

namespace hofseq {

Substitution::Substitution(unsigned k) : k_(k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}

Word Substitution::apply(const Word& w) const {
  Word out;
  out.reserve(w.size() + w.size() / 2 + 1);
  for (std::uint32_t letter : w) {
    if (letter < 1 || letter > k_)
      throw std::invalid_argument("substitution: letter outside {1..k}");
    if (letter == k_) {
      out.push_back(k_);
      out.push_back(1);
    } else {
      out.push_back(letter + 1);
    }
  }
  return out;
}

Word Substitution::apply_power(unsigned q, Word w) const {
  for (unsigned i = 0; i < q; ++i) w = apply(w);
  return w;
}

MorphicWord::MorphicWord(unsigned k) : sub_(k) { buf_.push_back(k); }

std::uint32_t MorphicWord::letter(std::size_t n) {
  prefix(n + 1);
  return buf_[n];
}

std::span<const std::uint32_t> MorphicWord::prefix(std::size_t n) {
  while (buf_.size() < n) buf_ = sub_.apply(buf_);
  return {buf_.data(), n};
}

SubstImageCache::SubstImageCache(unsigned k) : sub_(k) {
  images_.push_back(Word{k});
}

const Word& SubstImageCache::image(std::size_t j) {
  while (images_.size() <= j) images_.push_back(sub_.apply(images_.back()));
  return images_[j];
}

Word word_of_decomp(const Decomp& d, SubstImageCache& cache) {
  if (d.k != cache.k()) throw std::invalid_argument("decomposition/cache k mismatch");
  Word out;
  for (auto it = d.positions.rbegin(); it != d.positions.rend(); ++it) {
    const Word& img = cache.image(*it);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word word_of_decomp(const Decomp& d) {
  SubstImageCache cache(d.k);
  return word_of_decomp(d, cache);
}

std::uint64_t substituted_prefix_length(MorphicWord& w, std::uint64_t n) {
  auto pre = w.prefix(n);
  std::uint64_t len = n;
  const std::uint32_t k = w.k();
  for (std::uint32_t letter : pre)
    if (letter == k) ++len;
  return len;
}

std::string render_word(std::span<const std::uint32_t> w) {
  std::string s;
  s.reserve(w.size());
  for (std::uint32_t letter : w) {
    if (letter > 9) throw std::invalid_argument("render_word: letter above 9");
    s.push_back(static_cast<char>('0' + letter));
  }
  return s;
}

}  // namespace hofseq
