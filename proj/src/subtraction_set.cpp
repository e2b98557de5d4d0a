#include "randsub/subtraction_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "randsub/errors.hpp"

namespace randsub {

SubtractionSet::SubtractionSet(std::vector<Element> sorted_unique)
    : elements_(std::move(sorted_unique)) {
  gcd_ = 0;
  all_odd_ = true;
  for (Element k : elements_) {
    gcd_ = std::gcd(gcd_, k);
    all_odd_ = all_odd_ && (k % 2 == 1);
  }
}

std::uint64_t SubtractionSet::sum() const noexcept {
  return std::accumulate(elements_.begin(), elements_.end(), std::uint64_t{0});
}

std::vector<SubtractionSet::Element> SubtractionSet::d_values() const {
  std::vector<Element> d;
  d.reserve(size());
  for (std::size_t i = 0; i + 1 < size(); ++i) d.push_back(max() - elements_[i]);
  d.push_back(max());
  return d;
}

SubtractionSet SubtractionSet::without_max() const {
  if (size() < 2) throw ValidationError("cannot remove the only element of " + to_string());
  return prefix(size() - 1);
}

SubtractionSet SubtractionSet::prefix(std::size_t count) const {
  if (count == 0 || count > size()) throw ValidationError("bad prefix length");
  return SubtractionSet({elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(count)});
}

SubtractionSet SubtractionSet::scaled(Element m) const {
  if (m == 0) throw ValidationError("scale factor must be positive");
  std::vector<Element> out;
  out.reserve(size());
  for (Element k : elements_) {
    if (k > std::numeric_limits<Element>::max() / m) throw ValidationError("scaled element overflows");
    out.push_back(k * m);
  }
  return SubtractionSet(std::move(out));
}

bool SubtractionSet::contains(Element k) const {
  return std::binary_search(elements_.begin(), elements_.end(), k);
}

std::string SubtractionSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

SubtractionSet make_set(std::span<const std::int64_t> elems) {
  if (elems.empty()) throw ValidationError("subtraction set must be non-empty");
  std::vector<SubtractionSet::Element> out;
  out.reserve(elems.size());
  for (std::int64_t k : elems) {
    if (k <= 0) throw ValidationError("subtraction set entries must be positive, got " + std::to_string(k));
    if (k > std::numeric_limits<SubtractionSet::Element>::max()) {
      throw ValidationError("subtraction set entry too large: " + std::to_string(k));
    }
    out.push_back(static_cast<SubtractionSet::Element>(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SubtractionSet(std::move(out));
}

SubtractionSet make_set(std::initializer_list<std::int64_t> elems) {
  return make_set(std::span<const std::int64_t>(elems.begin(), elems.size()));
}

SubtractionSet parse_set(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t b = pos, e = comma;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, v);
    if (b == e || ec != std::errc{} || ptr != text.data() + e) {
      throw ValidationError("cannot parse subtraction set '" + text + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return make_set(values);
}

}  // namespace randsub
