#include "bqokit/seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bqokit {

namespace {

bool strictly_increasing(const std::vector<Nat>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

template <typename Seq>
std::string render(const Seq& s) {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < s.lh(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '>';
  return out.str();
}

}  // namespace

FinSeq::FinSeq(std::vector<Nat> entries) : entries_(std::move(entries)) {
  if (!strictly_increasing(entries_))
    throw std::invalid_argument("FinSeq entries must be strictly increasing: " + str());
}

FinSeq::FinSeq(std::initializer_list<Nat> entries) : FinSeq(std::vector<Nat>(entries)) {}

std::optional<FinSeq> FinSeq::try_make(std::vector<Nat> entries) {
  if (!strictly_increasing(entries)) return std::nullopt;
  FinSeq s;
  s.entries_ = std::move(entries);
  return s;
}

std::string FinSeq::str() const { return render(*this); }

bool FreeSeq::is_binary() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Nat v) { return v <= 1; });
}

std::string FreeSeq::str() const { return render(*this); }

namespace {
template <typename Seq>
bool length_lex_less_impl(const Seq& a, const Seq& b) noexcept {
  if (a.lh() != b.lh()) return a.lh() < b.lh();
  return a.entries() < b.entries();
}

template <typename Seq>
bool is_prefix_impl(const Seq& s, const Seq& t) noexcept {
  if (s.lh() > t.lh()) return false;
  return std::equal(s.entries().begin(), s.entries().end(), t.entries().begin());
}
}  // namespace

bool length_lex_less(const FinSeq& a, const FinSeq& b) noexcept { return length_lex_less_impl(a, b); }
bool length_lex_less(const FreeSeq& a, const FreeSeq& b) noexcept { return length_lex_less_impl(a, b); }

bool is_prefix(const FinSeq& s, const FinSeq& t) noexcept { return is_prefix_impl(s, t); }
bool is_prefix(const FreeSeq& s, const FreeSeq& t) noexcept { return is_prefix_impl(s, t); }
bool is_strict_prefix(const FinSeq& s, const FinSeq& t) noexcept {
  return s.lh() < t.lh() && is_prefix_impl(s, t);
}
bool is_strict_prefix(const FreeSeq& s, const FreeSeq& t) noexcept {
  return s.lh() < t.lh() && is_prefix_impl(s, t);
}

FinSeq prefix(const FinSeq& s, std::size_t i) {
  if (i > s.lh())
    throw std::out_of_range("prefix length " + std::to_string(i) + " exceeds lh " + std::to_string(s.lh()));
  std::vector<Nat> head(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(i));
  return FinSeq(std::move(head));
}

FreeSeq prefix(const FreeSeq& s, std::size_t i) {
  if (i > s.lh())
    throw std::out_of_range("prefix length " + std::to_string(i) + " exceeds lh " + std::to_string(s.lh()));
  std::vector<Nat> head(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(i));
  return FreeSeq(std::move(head));
}

FinSeq concat(const FinSeq& s, const FinSeq& t) {
  if (!s.empty() && !t.empty() && s.last() >= t[0])
    throw std::invalid_argument("cannot concatenate " + s.str() + " with " + t.str() +
                                ": junction is not increasing");
  std::vector<Nat> joined = s.entries();
  joined.insert(joined.end(), t.entries().begin(), t.entries().end());
  return FinSeq(std::move(joined));
}

std::vector<FinSeq> dominated_below(const FinSeq& s) {
  std::vector<FinSeq> out;
  std::vector<Nat> t;
  t.reserve(s.lh());
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == s.lh()) {
      out.push_back(FinSeq(t));
      return;
    }
    const Nat lo = (i == 0) ? 0 : t.back() + 1;
    for (Nat v = lo; v <= s[i]; ++v) {
      t.push_back(v);
      self(self, i + 1);
      t.pop_back();
    }
  };
  go(go, 0);
  return out;  // generated in lexicographic order
}

bool shift_rel(const FinSeq& s, const FinSeq& t) noexcept {
  const std::size_t ls = s.lh(), lt = t.lh();
  // u would need u(0) < u(1) = t(0), so t(0) = 0 has no room below it.
  if (ls == 0) return lt == 0 || t[0] >= 1;
  if (lt == 0) return true;  // u = s already works
  // u(j) is pinned to s(j) for j < ls and to t(j-1) for 1 <= j <= lt.
  const std::size_t overlap = std::min(ls - 1, lt);
  for (std::size_t j = 1; j <= overlap; ++j)
    if (s[j] != t[j - 1]) return false;
  // Junction where the t-pinned stretch first passes the end of s.
  if (lt >= ls && s[ls - 1] >= t[ls - 1]) return false;
  return true;
}

}  // namespace bqokit
