#include "cylabacus/notation.hpp"

namespace cylabacus {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos);
  }

  // Unsigned integer, no leading zeros.
  long long integer() {
    if (done() || peek() < '0' || peek() > '9') fail("expected digit");
    std::size_t start = pos;
    long long v = 0;
    while (!done() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos;
    }
    if (text[start] == '0' && pos - start > 1)
      throw ParseError("leading zero", start);
    return v;
  }
};

}  // namespace

Multipartition parse_multipartition(std::string_view text) {
  Cursor c{text};
  Multipartition mp;
  while (true) {
    std::vector<int> parts;
    if (!c.done() && c.peek() == '-') {
      ++c.pos;  // empty component
    } else {
      while (true) {
        std::size_t part_start = c.pos;
        long long value = c.integer();
        if (value < 1) throw ParseError("part must be >= 1", part_start);
        long long mult = 1;
        if (!c.done() && c.peek() == '^') {
          ++c.pos;
          std::size_t mult_start = c.pos;
          mult = c.integer();
          if (mult < 1) throw ParseError("multiplicity must be >= 1", mult_start);
          if (mult > 100000) throw ParseError("multiplicity too large", mult_start);
        }
        if (!parts.empty() && parts.back() < value)
          throw ParseError("parts must be weakly decreasing", part_start);
        parts.insert(parts.end(), (size_t)mult, (int)value);
        if (c.done() || c.peek() != '.') break;
        ++c.pos;
      }
    }
    mp.push_back(Partition(std::move(parts)));
    if (c.done()) break;
    if (c.peek() != '/') c.fail("expected '/', '.' or end of input");
    ++c.pos;
  }
  return mp;
}

std::string format_multipartition(const Multipartition& mp) {
  std::string out;
  for (size_t j = 0; j < mp.size(); ++j) {
    if (j) out += '/';
    const auto& parts = mp[j].parts();
    if (parts.empty()) {
      out += '-';
      continue;
    }
    for (size_t k = 0; k < parts.size();) {
      size_t run = 1;
      while (k + run < parts.size() && parts[k + run] == parts[k]) ++run;
      if (k) out += '.';
      out += std::to_string(parts[k]);
      if (run > 1) out += '^' + std::to_string(run);
      k += run;
    }
  }
  return out;
}

Charge parse_charge(std::string_view text) {
  Cursor c{text};
  std::vector<int> entries;
  while (true) {
    bool neg = false;
    if (!c.done() && c.peek() == '-') {
      neg = true;
      ++c.pos;
    }
    long long v = c.integer();
    if (neg && v == 0) throw ParseError("negative zero", c.pos - 1);
    entries.push_back((int)(neg ? -v : v));
    if (c.done()) break;
    if (c.peek() != ',') c.fail("expected ',' or end of input");
    ++c.pos;
  }
  return Charge(std::move(entries));
}

std::string format_charge(const Charge& s) {
  std::string out;
  for (int j = 1; j <= s.size(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(s.entry(j));
  }
  return out;
}

}  // namespace cylabacus
