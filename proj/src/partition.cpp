#include "eta/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eta {

int TypedPartition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int TypedPartition::ell_k() const {
  int n = 0;
  for (int p : parts) {
    if (p > k) ++n;
  }
  return n;
}

bool TypedPartition::has_k_part() const {
  for (int p : parts) {
    if (p == k) return true;
  }
  return false;
}

void validate(const TypedPartition& la) {
  if (la.k < 1) throw std::invalid_argument("partition: k must be >= 1");
  if (la.type < 0 || la.type > 2) {
    throw std::invalid_argument("partition: type must be 0, 1, or 2");
  }
  for (std::size_t i = 0; i < la.parts.size(); ++i) {
    if (la.parts[i] < 1) {
      throw std::invalid_argument("partition: parts must be positive");
    }
    if (i > 0) {
      if (la.parts[i] > la.parts[i - 1]) {
        throw std::invalid_argument("partition: parts must weakly decrease");
      }
      if (la.parts[i] == la.parts[i - 1] && la.parts[i] > la.k) {
        throw std::invalid_argument(
            "partition: parts greater than k may not repeat");
      }
    }
  }
  if ((la.type > 0) != la.has_k_part()) {
    throw std::invalid_argument(
        "partition: type 1 or 2 requires a part equal to k; type 0 forbids "
        "it");
  }
}

TypedPartition make_typed(std::vector<int> parts, int k, int type) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  TypedPartition la{std::move(parts), k, type};
  validate(la);
  return la;
}

bool typed_less(const TypedPartition& a, const TypedPartition& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  int len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int j = 1; j <= len; ++j) {
    sa += a.part(j);
    sb += b.part(j);
    if (sa != sb) return sa > sb;  // more dominant first
  }
  return a.type < b.type;
}

bool dominates_strictly(const std::vector<int>& a, const std::vector<int>& b) {
  int len = static_cast<int>(std::max(a.size(), b.size()));
  int sa = 0, sb = 0;
  bool strict = false;
  for (int j = 0; j < len; ++j) {
    sa += j < static_cast<int>(a.size()) ? a[j] : 0;
    sb += j < static_cast<int>(b.size()) ? b[j] : 0;
    if (sa < sb) return false;
    if (sa > sb) strict = true;
  }
  return strict;
}

bool c_set_contains(const std::vector<int>& parts, int k, int i, int j) {
  auto part = [&](int r) {
    return (r >= 1 && r <= static_cast<int>(parts.size())) ? parts[r - 1] : 0;
  };
  return i < j && part(i) + part(j) >= 2 * k + j - i;
}

std::set<std::pair<int, int>> c_set(const TypedPartition& la) {
  validate(la);
  int jmax = la.length();
  for (int i = 1; i <= la.length(); ++i) {
    jmax = std::max(jmax, la.part(i) + i - 2 * la.k);
  }
  std::set<std::pair<int, int>> out;
  for (int i = 1; i < jmax; ++i) {
    for (int j = i + 1; j <= jmax; ++j) {
      if (c_set_contains(la.parts, la.k, i, j)) out.insert({i, j});
    }
  }
  return out;
}

std::vector<int> beta_bar(const std::vector<int>& parts, int k, int len) {
  auto part = [&](int r) {
    return (r >= 1 && r <= static_cast<int>(parts.size())) ? parts[r - 1] : 0;
  };
  std::vector<int> out;
  for (int j = 1; j <= len; ++j) {
    int rank = 0;
    for (int i = 1; i < j; ++i) {
      if (!c_set_contains(parts, k, i, j)) ++rank;
    }
    out.push_back(k - part(j) + rank + (part(j) <= k ? 1 : 0));
  }
  return out;
}

std::vector<std::vector<int>> enumerate_shapes(int k, int rows, int cols) {
  if (k < 1) throw std::invalid_argument("enumerate_shapes: k must be >= 1");
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("enumerate_shapes: negative box");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int maxpart) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= rows) return;
    for (int p = maxpart; p >= 1; --p) {
      cur.push_back(p);
      self(self, p > k ? p - 1 : p);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  return out;
}

std::vector<TypedPartition> typed_lifts(const std::vector<int>& parts, int k) {
  bool kpart = std::find(parts.begin(), parts.end(), k) != parts.end();
  std::vector<TypedPartition> out;
  if (kpart) {
    out.push_back(make_typed(parts, k, 1));
    out.push_back(make_typed(parts, k, 2));
  } else {
    out.push_back(make_typed(parts, k, 0));
  }
  return out;
}

std::vector<TypedPartition> enumerate_typed(int k, int rows, int cols) {
  std::vector<TypedPartition> out;
  for (const auto& sh : enumerate_shapes(k, rows, cols)) {
    for (auto& la : typed_lifts(sh, k)) out.push_back(std::move(la));
  }
  std::sort(out.begin(), out.end(), typed_less);
  return out;
}

/*****************************************************************************
 * Parsing and formatting
 *****************************************************************************/

namespace {

std::vector<int> parse_parts(const std::string& text, std::size_t end) {
  std::vector<int> parts;
  int cur = -1;
  for (std::size_t i = 0; i < end; ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
      if (cur > 1000000) {
        throw std::invalid_argument("partition '" + text +
                                    "': part too large at position " +
                                    std::to_string(i));
      }
    } else if (ch == ',') {
      if (cur < 0) {
        throw std::invalid_argument("partition '" + text +
                                    "': expected a number at position " +
                                    std::to_string(i));
      }
      parts.push_back(cur);
      cur = -1;
    } else {
      throw std::invalid_argument("partition '" + text +
                                  "': unexpected character '" + ch +
                                  "' at position " + std::to_string(i));
    }
  }
  if (cur < 0) {
    if (end != 0) {
      throw std::invalid_argument("partition '" + text +
                                  "': trailing comma at position " +
                                  std::to_string(end - 1));
    }
  } else {
    parts.push_back(cur);
  }
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  for (int p : parts) {
    if (p == 0) {
      throw std::invalid_argument("partition '" + text +
                                  "': zero part not allowed");
    }
  }
  return parts;
}

}  // namespace

TypedPartition parse_partition(const std::string& text, int k) {
  if (text.empty() || text == "-") return make_typed({}, k, 0);
  std::size_t colon = text.find(':');
  std::vector<int> parts =
      parse_parts(text, colon == std::string::npos ? text.size() : colon);
  int type;
  if (colon == std::string::npos) {
    // bare parts: type 0 when legal; otherwise the validator's message
    // explains the rule
    type = 0;
  } else {
    std::string suffix = text.substr(colon + 1);
    if (suffix == "t0") {
      type = 0;
    } else if (suffix == "t1") {
      type = 1;
    } else if (suffix == "t2") {
      type = 2;
    } else {
      throw std::invalid_argument("partition '" + text +
                                  "': expected t0, t1, or t2 at position " +
                                  std::to_string(colon + 1));
    }
  }
  return make_typed(std::move(parts), k, type);
}

std::vector<int> parse_shape(const std::string& text, int k) {
  if (k < 1) throw std::invalid_argument("parse_shape: k must be >= 1");
  if (text.empty() || text == "-") return {};
  if (text.find(':') != std::string::npos) {
    throw std::invalid_argument(
        "shape '" + text +
        "': the hatted class is type-independent; pass bare parts");
  }
  std::vector<int> parts = parse_parts(text, text.size());
  TypedPartition probe{parts, k, 0};
  probe.type = probe.has_k_part() ? 1 : 0;
  validate(probe);  // shape-level checks (k-strictness etc.)
  return parts;
}

std::string format_partition(const TypedPartition& la) {
  std::ostringstream os;
  if (la.parts.empty()) {
    os << "0";
  } else {
    for (std::size_t i = 0; i < la.parts.size(); ++i) {
      if (i) os << ",";
      os << la.parts[i];
    }
  }
  os << ":t" << la.type;
  return os.str();
}

std::string format_shape(const std::vector<int>& parts) {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

}  // namespace eta
