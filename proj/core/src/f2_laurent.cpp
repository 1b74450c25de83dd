#include "zdyn/f2_laurent.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

using Words = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// dst ^= src << shift, growing dst as needed.
void xor_shifted(Words& dst, const Words& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  const std::size_t needed = src.size() + word_shift + (bit_shift ? 1 : 0);
  if (dst.size() < needed) dst.resize(needed, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= src[i] << bit_shift;
    if (bit_shift) dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
  }
}

// 64 bits of `words` starting at bit position `start` (may be negative).
std::uint64_t extract64(const Words& words, long start) {
  std::uint64_t out = 0;
  auto bit_word = [&](long word_index) -> std::uint64_t {
    if (word_index < 0 || word_index >= static_cast<long>(words.size())) return 0;
    return words[static_cast<std::size_t>(word_index)];
  };
  const long word_index = start >= 0 ? start / 64 : -((-start + 63) / 64);
  const long offset = start - word_index * 64;  // in [0, 64)
  out = bit_word(word_index) >> offset;
  if (offset) out |= bit_word(word_index + 1) << (64 - offset);
  return out;
}

bool test_bit(const Words& words, std::size_t k) {
  return (words[k / 64] >> (k % 64)) & 1u;
}

// Power-series quotient p / (1 + t^s), truncated to p.size() words.
Words divide_by_binomial(const Words& p, std::size_t s) {
  Words q(p.size(), 0);
  if (s < 64) {
    for (std::size_t w = 0; w < p.size(); ++w) {
      std::uint64_t g = p[w];
      if (w > 0) g ^= q[w - 1] >> (64 - s);
      for (std::size_t sh = s; sh < 64; sh <<= 1) g ^= g << sh;
      q[w] = g;
    }
  } else {
    for (std::size_t w = 0; w < p.size(); ++w) {
      q[w] = p[w] ^ extract64(q, static_cast<long>(64 * w) - static_cast<long>(s));
    }
  }
  return q;
}

}  // namespace

F2Laurent::F2Laurent(std::vector<std::uint64_t> words, long low)
    : words_(std::move(words)), low_(low) {
  normalize();
}

F2Laurent F2Laurent::monomial(long exponent) { return F2Laurent({1u}, exponent); }

F2Laurent F2Laurent::one_plus_t() { return F2Laurent({3u}, 0); }

void F2Laurent::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  if (words_.empty()) {
    low_ = 0;
    return;
  }
  std::size_t first = 0;
  while (words_[first] == 0) ++first;
  const auto shift = first * 64 + static_cast<std::size_t>(std::countr_zero(words_[first]));
  if (shift == 0) return;
  Words shifted(words_for(bit_length() - shift), 0);
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    shifted[i] = extract64(words_, static_cast<long>(shift + 64 * i));
  }
  words_ = std::move(shifted);
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  low_ += static_cast<long>(shift);
}

std::size_t F2Laurent::bit_length() const noexcept {
  if (words_.empty()) return 0;
  return 64 * (words_.size() - 1) + static_cast<std::size_t>(std::bit_width(words_.back()));
}

long F2Laurent::high() const noexcept {
  return low_ + static_cast<long>(bit_length()) - 1;
}

bool F2Laurent::coefficient(long exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > high()) return false;
  return test_bit(words_, static_cast<std::size_t>(exponent - low_));
}

F2Laurent F2Laurent::operator+(const F2Laurent& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const long low = std::min(low_, other.low_);
  Words sum;
  xor_shifted(sum, words_, static_cast<std::size_t>(low_ - low));
  xor_shifted(sum, other.words_, static_cast<std::size_t>(other.low_ - low));
  return F2Laurent(std::move(sum), low);
}

F2Laurent F2Laurent::operator*(const F2Laurent& other) const {
  if (is_zero() || other.is_zero()) return {};
  const F2Laurent& sparse = words_.size() <= other.words_.size() ? *this : other;
  const F2Laurent& dense = &sparse == this ? other : *this;
  Words product(sparse.words_.size() + dense.words_.size() + 1, 0);
  for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
    std::uint64_t bits = sparse.words_[w];
    while (bits) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      xor_shifted(product, dense.words_, 64 * w + b);
      bits &= bits - 1;
    }
  }
  return F2Laurent(std::move(product), low_ + other.low_);
}

F2Laurent F2Laurent::squared() const {
  // Frobenius: squaring spreads the bits apart.
  Words out(2 * words_.size(), 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (unsigned half = 0; half < 2; ++half) {
      std::uint64_t x = (words_[w] >> (32 * half)) & 0xFFFFFFFFu;
      x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
      x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
      x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
      x = (x | (x << 2)) & 0x3333333333333333ull;
      x = (x | (x << 1)) & 0x5555555555555555ull;
      out[2 * w + half] = x;
    }
  }
  return F2Laurent(std::move(out), 2 * low_);
}

F2Laurent F2Laurent::pow(unsigned long exponent) const {
  F2Laurent result = one();
  F2Laurent base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base = base.squared();
  }
  return result;
}

long F2Laurent::order_at_one_plus_t() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "order of zero at t+1 is undefined");
  Words p = words_;
  auto degree = static_cast<std::size_t>(bit_length() - 1);
  long order = 0;
  // (1+t)^(2^j) = 1 + t^(2^j); peel off the binary digits of the order greedily.
  for (std::size_t s = degree ? std::bit_floor(degree) : 0; s >= 1; s >>= 1) {
    if (s > degree) continue;
    Words q = divide_by_binomial(p, s);
    bool divisible = true;
    for (std::size_t k = degree - s + 1; k <= degree; ++k) {
      if (test_bit(q, k)) {
        divisible = false;
        break;
      }
    }
    if (!divisible) continue;
    degree -= s;
    q.resize(words_for(degree + 1));
    if (const auto tail = (degree + 1) % 64) q.back() &= (std::uint64_t{1} << tail) - 1;
    p = std::move(q);
    order += static_cast<long>(s);
  }
  return order;
}

std::string F2Laurent::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long e = low_; e <= high(); ++e) {
    if (!coefficient(e)) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 't';
    } else {
      out += "t^" + std::to_string(e);
    }
  }
  return out;
}

F2Laurent F2Laurent::parse(const std::string& text) {
  F2Laurent result;
  std::string term;
  auto flush = [&](const std::string& raw) {
    std::string t;
    for (char c : raw) {
      if (c != ' ' && c != '\t') t += c;
    }
    if (t.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + text + "'");
    if (t == "0") return;
    if (t == "1") {
      result += one();
      return;
    }
    if (t == "t") {
      result += monomial(1);
      return;
    }
    if (t.rfind("t^", 0) == 0 && t.size() > 2) {
      std::size_t used = 0;
      long e = 0;
      try {
        e = std::stol(t.substr(2), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == t.size() - 2) {
        result += monomial(e);
        return;
      }
    }
    throw Error(ErrorKind::ParseError, "bad F_2 Laurent term '" + t + "' in '" + text + "'");
  };
  for (char c : text) {
    if (c == '+') {
      flush(term);
      term.clear();
    } else {
      term += c;
    }
  }
  flush(term);
  return result;
}

std::string to_string(F2Place place) {
  switch (place) {
    case F2Place::Infinite: return "inf";
    case F2Place::T: return "t";
    case F2Place::OnePlusT: return "t+1";
  }
  return "?";
}

long f2_place_exponent(const F2Laurent& f, F2Place place) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "place value of zero");
  switch (place) {
    case F2Place::Infinite: return f.high();
    case F2Place::T: return -f.low();
    case F2Place::OnePlusT: return -f.order_at_one_plus_t();
  }
  return 0;
}

double f2_place_value(const F2Laurent& f, F2Place place) {
  return static_cast<double>(f2_place_exponent(f, place)) * std::numbers::ln2;
}

}  // namespace zdyn
