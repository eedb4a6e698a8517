#include "symchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace symchar {

IntSeq::IntSeq(std::initializer_list<int> entries) : entries_(entries) {
  canonicalize();
}

IntSeq::IntSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  canonicalize();
}

void IntSeq::canonicalize() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

std::vector<int> IntSeq::padded(std::size_t l) const {
  if (l < entries_.size())
    throw std::invalid_argument("sequence " + to_string(*this) +
                                " has length " +
                                std::to_string(entries_.size()) + " > " +
                                std::to_string(l));
  std::vector<int> out(entries_);
  out.resize(l, 0);
  return out;
}

IntSeq& IntSeq::operator+=(const IntSeq& other) {
  if (other.entries_.size() > entries_.size())
    entries_.resize(other.entries_.size(), 0);
  for (std::size_t i = 0; i < other.entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  canonicalize();
  return *this;
}

IntSeq& IntSeq::operator-=(const IntSeq& other) {
  if (other.entries_.size() > entries_.size())
    entries_.resize(other.entries_.size(), 0);
  for (std::size_t i = 0; i < other.entries_.size(); ++i)
    entries_[i] -= other.entries_[i];
  canonicalize();
  return *this;
}

long weight(const IntSeq& seq) noexcept {
  auto e = seq.entries();
  return std::accumulate(e.begin(), e.end(), 0L);
}

bool is_nonnegative(const IntSeq& seq) noexcept {
  auto e = seq.entries();
  return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

bool is_partition(const IntSeq& seq) noexcept {
  auto e = seq.entries();
  return is_nonnegative(seq) &&
         std::is_sorted(e.begin(), e.end(), std::greater<>{});
}

namespace {

void check_index(std::size_t i) {
  if (i < 1) throw std::invalid_argument("sequence index must be >= 1");
}

std::vector<int> unit_padded(const IntSeq& seq, std::size_t i) {
  std::vector<int> v(seq.entries().begin(), seq.entries().end());
  if (v.size() < i) v.resize(i, 0);
  return v;
}

}  // namespace

IntSeq add_eps(const IntSeq& seq, std::size_t i) {
  check_index(i);
  auto v = unit_padded(seq, i);
  ++v[i - 1];
  return IntSeq(std::move(v));
}

IntSeq sub_eps(const IntSeq& seq, std::size_t i) {
  check_index(i);
  auto v = unit_padded(seq, i);
  --v[i - 1];
  return IntSeq(std::move(v));
}

IntSeq ones(std::size_t l) { return IntSeq(std::vector<int>(l, 1)); }

IntSeq identity_seq(std::size_t l) {
  std::vector<int> v(l);
  std::iota(v.begin(), v.end(), 1);
  return IntSeq(std::move(v));
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(IntSeq(parts)) {}

Partition::Partition(IntSeq seq) : seq_(std::move(seq)) {
  if (!is_partition(seq_))
    throw std::invalid_argument("not a partition: (" + to_string(seq_) + ")");
  weight_ = static_cast<int>(symchar::weight(seq_));
}

Partition Partition::sorted(const IntSeq& seq) {
  std::vector<int> v(seq.entries().begin(), seq.entries().end());
  std::sort(v.begin(), v.end(), std::greater<>{});
  return Partition(IntSeq(std::move(v)));
}

std::strong_ordering revlex_cmp(const Partition& delta,
                                const Partition& beta) {
  if (delta.weight() != beta.weight())
    throw WeightMismatch("revlex_cmp: (" + to_string(delta) + ") has weight " +
                         std::to_string(delta.weight()) + " but (" +
                         to_string(beta) + ") has weight " +
                         std::to_string(beta.weight()));
  const std::size_t len = std::max(delta.length(), beta.length());
  for (std::size_t k = 1; k <= len; ++k) {
    if (delta[k] != beta[k])
      return delta[k] > beta[k] ? std::strong_ordering::less
                                : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

// Emits partitions of `remaining` with parts <= `max_part` in descending
// lexicographic order, which is ascending reverse-lex order.
void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(IntSeq(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

std::size_t partition_count(int n) {
  if (n < 0) return 0;
  // Coin-change count over part sizes 1..n.
  std::vector<std::size_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  return ways[n];
}

std::vector<int> multiplicity_vector(const Partition& p) {
  if (p.empty())
    throw std::invalid_argument("multiplicity_vector: zero partition");
  auto parts = p.parts();
  std::vector<int> mu(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j)
    mu[j] = static_cast<int>(std::count(parts.begin(), parts.end(), parts[j]));
  return mu;
}

std::vector<Cycle> sigma_beta(const Partition& beta) {
  std::vector<Cycle> cycles;
  int offset = 0;
  for (int len : beta.parts()) {
    Cycle c(static_cast<std::size_t>(len));
    std::iota(c.begin(), c.end(), offset + 1);
    offset += len;
    cycles.push_back(std::move(c));
  }
  return cycles;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

ClassInfo class_info(const Partition& beta) {
  std::map<int, int> multiplicity;
  for (int part : beta.parts()) ++multiplicity[part];
  BigInt z = 1;
  for (auto [part, count] : multiplicity) {
    z *= boost::multiprecision::pow(BigInt(part), static_cast<unsigned>(count));
    z *= factorial(count);
  }
  BigInt size = factorial(beta.weight()) / z;
  return ClassInfo{beta, std::move(z), std::move(size)};
}

std::string to_string(const IntSeq& seq) {
  std::string out;
  for (int x : seq.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  std::vector<int> parts;
  if (whole.empty()) return Partition{};
  std::string_view rest = whole;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view field = trim(rest.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} ||
        ptr != field.data() + field.size())
      throw ParseError("invalid partition \"" + std::string(text) +
                       "\": bad part \"" + std::string(field) + "\"");
    if (value <= 0)
      throw ParseError("invalid partition \"" + std::string(text) +
                       "\": parts must be positive");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{})) {
    auto sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    throw ParseError("invalid partition \"" + std::string(text) +
                     "\": parts must be weakly decreasing (did you mean \"" +
                     to_string(IntSeq(sorted)) + "\"?)");
  }
  return Partition(IntSeq(std::move(parts)));
}

std::size_t IntSeqHash::operator()(const IntSeq& seq) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : seq.entries()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace symchar
