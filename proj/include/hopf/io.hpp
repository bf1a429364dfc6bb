#pragma once

// JSON and shorthand encodings. Everything external is 1-based.
//
//   element  {"monoid": "hg", "n": 4, "data": [[1,2,4],[2,3,4]]}
//   lxh      {"monoid": "lxh", "inner": "g", "n": 3, "data": [[2,1,3], [[1,2]]]}
//   sum      {"<compact data>": coefficient, ...}
//
// Shorthand: orders "2143" or "2,1,4,3"; partitions "12/3" or "1,2/3";
// graphs "1-2,2-3"; hypergraphs "1,2,4/2,3,4"; lxh "order:inner".

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/compositions.hpp"
#include "hopf/formal_sum.hpp"
#include "hopf/monoids.hpp"

namespace hopf::io {

using json = nlohmann::json;

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline int parse_label(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidInput("expected a positive integer, got '" + tok + "'");
  }
  if (tok.size() > 3) throw InvalidInput("label out of range: " + tok);
  const int v = std::stoi(tok);
  if (v < 1 || v > kMaxElements) throw InvalidInput("label out of range: " + tok);
  return v - 1;
}

/// "2143" (single digits) or "2,1,4,3".
inline std::vector<int> parse_labels(const std::string& s) {
  const std::string t = trim(s);
  std::vector<int> out;
  if (t.empty()) return out;
  if (t.find(',') == std::string::npos && t.find(' ') == std::string::npos) {
    for (char c : t) out.push_back(parse_label(std::string(1, c)));
    return out;
  }
  for (const auto& tok : split(t, ',')) out.push_back(parse_label(tok));
  return out;
}

inline Mask labels_mask(const std::vector<int>& v) {
  Mask m = 0;
  for (int i : v) {
    if (contains(m, i)) throw InvalidInput("repeated label");
    m |= bit(i);
  }
  return m;
}

inline json mask_json(Mask m) {
  json a = json::array();
  for (int i : elements_of(m)) a.push_back(i + 1);
  return a;
}

inline Mask json_mask(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of labels");
  Mask m = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput("labels must be integers");
    const int i = v.get<int>() - 1;
    if (i < 0 || i >= kMaxElements) throw InvalidInput("label out of range");
    if (contains(m, i)) throw InvalidInput("repeated label");
    m |= bit(i);
  }
  return m;
}

inline std::string mask_text(Mask m) {
  std::string out;
  const bool wide = highest_element(m) >= 9;
  for (int i : elements_of(m)) {
    if (wide && !out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

inline int max_label(Mask m) { return m == 0 ? 0 : highest_element(m) + 1; }

inline Mask ground_for(int n, Mask used) {
  if (n < 0) n = max_label(used);
  if (n > kMaxElements) throw InvalidInput("ground set too large");
  if (!is_subset(used, full_mask(n))) throw InvalidInput("label exceeds n");
  return full_mask(n);
}

}  // namespace detail

/// Per-monoid codec. `n < 0` means infer the ground set from the data.
template <class M>
struct Codec;

template <>
struct Codec<Orders> {
  static json to_data(const LinearOrder& x) {
    json a = json::array();
    for (int v : x.seq) a.push_back(v + 1);
    return a;
  }
  static LinearOrder from_data(const json& j, int n) {
    if (!j.is_array()) throw InvalidInput("a linear order is an array of labels");
    LinearOrder o;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw InvalidInput("labels must be integers");
      o.seq.push_back(v.get<int>() - 1);
    }
    return finish(std::move(o), n);
  }
  static LinearOrder parse(const std::string& s, int n) { return finish(LinearOrder{detail::parse_labels(s)}, n); }
  static std::string text(const LinearOrder& x) {
    const bool wide = x.size() > 9;
    std::string out;
    for (int v : x.seq) {
      if (wide && !out.empty()) out += ",";
      out += std::to_string(v + 1);
    }
    return out.empty() ? "()" : out;
  }

 private:
  static LinearOrder finish(LinearOrder o, int n) {
    if (n < 0) n = o.size();
    if (!is_permutation_of(o, full_mask(n))) throw InvalidInput("linear order must be a permutation of 1..n");
    return o;
  }
};

template <>
struct Codec<Partitions> {
  static json to_data(const SetPartition& x) {
    json a = json::array();
    for (Mask b : x.blocks) a.push_back(detail::mask_json(b));
    return a;
  }
  static SetPartition from_data(const json& j, int n) {
    if (!j.is_array()) throw InvalidInput("a set partition is an array of blocks");
    std::vector<Mask> blocks;
    for (const auto& b : j) blocks.push_back(detail::json_mask(b));
    return finish(std::move(blocks), n);
  }
  static SetPartition parse(const std::string& s, int n) {
    std::vector<Mask> blocks;
    if (!detail::trim(s).empty()) {
      for (const auto& tok : detail::split(s, '/')) blocks.push_back(detail::labels_mask(detail::parse_labels(tok)));
    }
    return finish(std::move(blocks), n);
  }
  static std::string text(const SetPartition& x) {
    std::string out;
    for (Mask b : x.blocks) out += (out.empty() ? "" : "/") + detail::mask_text(b);
    return out.empty() ? "()" : out;
  }

 private:
  static SetPartition finish(std::vector<Mask> blocks, int n) {
    Mask used = 0;
    for (Mask b : blocks) {
      if (b == 0 || (used & b)) throw InvalidInput("blocks must be nonempty and disjoint");
      used |= b;
    }
    if (used != detail::ground_for(n, used)) throw InvalidInput("blocks must cover 1..n");
    SetPartition p = canonical_partition(std::move(blocks));
    Partitions::validate(p);
    return p;
  }
};

template <EdgeFamily F>
struct Codec<EdgeMonoid<F>> {
  using M = EdgeMonoid<F>;
  static json to_data(const Hypergraph& x) {
    json a = json::array();
    for (Mask e : x.edges) a.push_back(detail::mask_json(e));
    return a;
  }
  static Hypergraph from_data(const json& j, int n) {
    if (!j.is_array()) throw InvalidInput("an edge list is an array of arrays");
    std::vector<Mask> edges;
    for (const auto& e : j) edges.push_back(detail::json_mask(e));
    return finish(std::move(edges), n);
  }
  /// "1-2,2-3" or "1,2,4/2,3,4"; empty means no edges.
  static Hypergraph parse(const std::string& s, int n) {
    std::vector<Mask> edges;
    const std::string t = detail::trim(s);
    if (!t.empty()) {
      if (t.find('-') != std::string::npos) {
        for (const auto& tok : detail::split(t, ',')) {
          std::vector<int> ends;
          for (const auto& v : detail::split(tok, '-')) ends.push_back(detail::parse_label(v));
          edges.push_back(detail::labels_mask(ends));
        }
      } else {
        for (const auto& tok : detail::split(t, '/')) edges.push_back(detail::labels_mask(detail::parse_labels(tok)));
      }
    }
    return finish(std::move(edges), n);
  }
  static std::string text(const Hypergraph& x) {
    if (x.edges.empty()) return "()";
    std::string out;
    for (Mask e : x.edges) out += (out.empty() ? "" : "/") + detail::mask_text(e);
    return out;
  }

 private:
  static Hypergraph finish(std::vector<Mask> edges, int n) {
    Mask used = 0;
    for (Mask e : edges) used |= e;
    const Mask ground = detail::ground_for(n, used);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidInput("duplicate edge");
    return M::make(ground, std::move(edges));
  }
};

template <class H>
struct Codec<Hadamard<Orders, H>> {
  using E = typename Hadamard<Orders, H>::element;
  static json to_data(const E& x) { return json::array({Codec<Orders>::to_data(x.first), Codec<H>::to_data(x.second)}); }
  static E from_data(const json& j, int n) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("an L x H element is [order, inner]");
    LinearOrder o = Codec<Orders>::from_data(j[0], n);
    const int size = o.size();
    return finish(std::move(o), Codec<H>::from_data(j[1], size));
  }
  static E parse(const std::string& s, int n) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidInput("L x H shorthand is 'order:inner'");
    LinearOrder o = Codec<Orders>::parse(s.substr(0, colon), n);
    const int size = o.size();
    return finish(std::move(o), Codec<H>::parse(s.substr(colon + 1), size));
  }
  static std::string text(const E& x) { return "(" + Codec<Orders>::text(x.first) + ", " + Codec<H>::text(x.second) + ")"; }

 private:
  static E finish(LinearOrder o, typename H::element y) {
    E e{std::move(o), std::move(y)};
    Hadamard<Orders, H>::validate(e);
    return e;
  }
};

/// Accepts a full element object, bare JSON data, or shorthand.
template <class M>
typename M::element parse_element(const std::string& text, int n = -1) {
  const std::string t = detail::trim(text);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    try {
      if (j.is_object()) {
        if (!j.contains("data")) throw InvalidInput("element object needs a 'data' field");
        if (j.contains("monoid")) {
          std::string expected = M::name();
          if constexpr (requires { typename M::second_monoid; }) expected = "lxh";
          if (j["monoid"].get<std::string>() != expected) {
            throw MonoidMismatch("element is tagged '" + j["monoid"].get<std::string>() + "', expected '" + expected + "'");
          }
        }
        if (j.contains("n")) n = j["n"].get<int>();
        return Codec<M>::from_data(j["data"], n);
      }
      return Codec<M>::from_data(j, n);
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("malformed element: ") + e.what());
    }
  }
  return Codec<M>::parse(t, n);
}

template <class M>
json element_json(const typename M::element& x) {
  json j;
  if constexpr (requires { typename M::second_monoid; }) {
    j["monoid"] = "lxh";
    j["inner"] = M::second_monoid::name();
  } else {
    j["monoid"] = M::name();
  }
  j["n"] = popcount(M::support(x));
  j["data"] = Codec<M>::to_data(x);
  return j;
}

/// Keys are the compact data encodings; nlohmann objects keep them sorted.
template <class M>
json sum_json(const FormalSum<typename M::element>& s) {
  json j = json::object();
  for (const auto& [e, c] : s) j[Codec<M>::to_data(e).dump()] = c;
  return j;
}

/// One "+c element" line per term, in canonical element order.
template <class M>
std::string sum_text(const FormalSum<typename M::element>& s) {
  if (s.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [e, c] : s) out << (c > 0 ? "+" : "") << c << " " << Codec<M>::text(e) << "\n";
  return out.str();
}

}  // namespace hopf::io
