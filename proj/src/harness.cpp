#include "twoblock/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "twoblock/detection.hpp"
#include "twoblock/error.hpp"
#include "twoblock/exact_color.hpp"

namespace twoblock {

namespace {

constexpr char kHex[] = "0123456789abcdef";

std::string hex_u64(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(x));
  return buf;
}

// Bit u*n+v of the adjacency matrix counted from the most significant end.
std::uint64_t small_code(const Digraph& d, std::span<const Vertex> perm) {
  const int n = d.vertex_count();
  const int total = n * n;
  std::uint64_t code = 0;
  for (const Arc& a : d.arcs()) {
    code |= std::uint64_t{1} << (total - 1 - (perm[a.tail] * n + perm[a.head]));
  }
  return code;
}

void check_tournament_n(int n) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolated, "negative vertex count");
  if (n > 7) throw Error(ErrorKind::CapExceeded, "tournament enumeration is limited to n <= 7");
}

}  // namespace

std::string encode_adjacency(const Digraph& d) {
  const int n = d.vertex_count();
  const int total = n * n;
  std::vector<bool> bits(total);  // bits[p]: weight 2^p
  for (const Arc& a : d.arcs()) bits[total - 1 - (a.tail * n + a.head)] = true;
  std::string out;
  for (int p = 0; p < total; p += 4) {
    int digit = 0;
    for (int t = 0; t < 4 && p + t < total; ++t) digit |= bits[p + t] ? 1 << t : 0;
    out.push_back(kHex[digit]);
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (out.empty()) out = "0";
  std::reverse(out.begin(), out.end());
  return out;
}

Digraph decode_adjacency(int n, std::string_view hex) {
  if (n < 0 || hex.empty()) throw Error(ErrorKind::ParseError, "bad adjacency encoding");
  const int total = n * n;
  std::vector<Arc> arcs;
  const int len = static_cast<int>(hex.size());
  for (int i = 0; i < len; ++i) {
    const char c = hex[len - 1 - i];
    int digit = 0;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      throw Error(ErrorKind::ParseError, std::string("bad hex digit '") + c + "'");
    }
    for (int t = 0; t < 4; ++t) {
      if ((digit >> t & 1) == 0) continue;
      const int p = 4 * i + t;
      if (p >= total) throw Error(ErrorKind::ParseError, "encoding wider than n*n bits");
      const int idx = total - 1 - p;
      const Arc a{idx / n, idx % n};
      if (a.tail == a.head) throw Error(ErrorKind::ParseError, "diagonal bit set");
      arcs.push_back(a);
    }
  }
  return Digraph::build(n, arcs);
}

std::string canonical_form(const Digraph& d) {
  const int n = d.vertex_count();
  check_tournament_n(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = small_code(d, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, small_code(d, perm));
  return hex_u64(best);
}

bool is_tournament(const Digraph& d) {
  const int n = d.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (d.has_arc(a, b) == d.has_arc(b, a)) return false;
    }
  }
  return true;
}

Digraph figure1_tournament() {
  static const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                     {3, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}};
  return Digraph::build(5, arcs);
}

Digraph tournament_from_index(int n, std::uint64_t index) {
  check_tournament_n(n);
  std::vector<Arc> arcs;
  int bit = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++bit) {
      arcs.push_back((index >> bit & 1) != 0 ? Arc{b, a} : Arc{a, b});
    }
  }
  return Digraph::build(n, arcs);
}

std::vector<Digraph> enumerate_tournaments(int n, bool dedup) {
  check_tournament_n(n);
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<Digraph> out;
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < count; ++i) {
    Digraph t = tournament_from_index(n, i);
    if (dedup && !seen.insert(canonical_form(t)).second) continue;
    out.push_back(std::move(t));
  }
  return out;
}

void to_json(json& j, const InstanceRecord& r) {
  json verdicts = json::array();
  for (const PairVerdict& v : r.verdicts) {
    verdicts.push_back({{"k", v.k}, {"ell", v.ell}, {"present", v.present}});
  }
  j = json{{"instance_id", r.instance_id},
           {"seed", r.seed},
           {"n", r.vertex_count},
           {"adjacency", r.encoding},
           {"tags", {{"strong", r.strong}, {"tournament", r.tournament}, {"hamiltonian", r.hamiltonian}}},
           {"chi", r.chi ? json(*r.chi) : json(nullptr)},
           {"longest_cycle", r.longest_cycle ? json(*r.longest_cycle) : json(nullptr)},
           {"verdicts", std::move(verdicts)}};
}

void from_json(const json& j, InstanceRecord& r) {
  r.instance_id = j.at("instance_id").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.vertex_count = j.at("n").get<int>();
  r.encoding = j.at("adjacency").get<std::string>();
  const json& tags = j.at("tags");
  r.strong = tags.at("strong").get<bool>();
  r.tournament = tags.at("tournament").get<bool>();
  r.hamiltonian = tags.at("hamiltonian").get<bool>();
  r.chi = j.at("chi").is_null() ? std::nullopt : std::optional<int>(j.at("chi").get<int>());
  r.longest_cycle = j.at("longest_cycle").is_null()
                        ? std::nullopt
                        : std::optional<int>(j.at("longest_cycle").get<int>());
  r.verdicts.clear();
  for (const json& v : j.at("verdicts")) {
    r.verdicts.push_back({v.at("k").get<int>(), v.at("ell").get<int>(), v.at("present").get<bool>()});
  }
}

InstanceRecord measure_instance(std::int64_t id, std::uint64_t seed, const Digraph& d,
                                std::span<const PairVerdict> pairs, const SearchConfig& config) {
  SearchConfig strict = config;
  strict.strict = true;
  const int n = d.vertex_count();
  InstanceRecord r;
  r.instance_id = id;
  r.seed = seed;
  r.vertex_count = n;
  r.encoding = encode_adjacency(d);
  r.strong = is_strong(d);
  r.tournament = is_tournament(d);
  if (n <= config.longest_cycle_cap) {
    r.hamiltonian = n >= 2 && hamiltonian_cycle(d, strict).has_value();
    try {
      r.longest_cycle = longest_cycle(d, strict).length();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Acyclic) throw;
      r.longest_cycle = 0;
    }
  }
  if (n <= config.chromatic_cap) r.chi = chromatic_number(underlying_graph(d), strict).chi;
  for (const PairVerdict& p : pairs) {
    r.verdicts.push_back({p.k, p.ell, found(find_two_block_cycle(d, p.k, p.ell, strict))});
  }
  return r;
}

std::optional<std::string> reverify(const InstanceRecord& r, const SearchConfig& config) {
  Digraph d;
  try {
    d = decode_adjacency(r.vertex_count, r.encoding);
  } catch (const Error& e) {
    return std::string("encoding does not decode: ") + e.what();
  }
  if (encode_adjacency(d) != r.encoding) return std::string("encoding does not round-trip");
  const InstanceRecord again = measure_instance(r.instance_id, r.seed, d, r.verdicts, config);
  if (again.strong != r.strong) return std::string("strong tag differs");
  if (again.tournament != r.tournament) return std::string("tournament tag differs");
  if (again.hamiltonian != r.hamiltonian) return std::string("hamiltonian tag differs");
  if (again.chi != r.chi) return std::string("chi differs");
  if (again.longest_cycle != r.longest_cycle) return std::string("longest cycle differs");
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    if (again.verdicts[i] != r.verdicts[i]) {
      return "verdict for (" + std::to_string(r.verdicts[i].k) + "," +
             std::to_string(r.verdicts[i].ell) + ") differs";
    }
  }
  return std::nullopt;
}

std::vector<PairVerdict> problem1_pairs(int n) {
  std::vector<PairVerdict> out;
  for (int k = n - 1; k >= n - k && k >= 1; --k) out.push_back({k, n - k, false});
  return out;
}

Problem1Result search_problem1(int n, const SearchConfig& config, int workers) {
  if (n < 4 || n > 7) throw Error(ErrorKind::PreconditionViolated, "search needs 4 <= n <= 7");
  const std::vector<PairVerdict> pairs = problem1_pairs(n);
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  struct Item {
    bool strong = false;
    std::optional<InstanceRecord> hit;
  };
  const std::function<Item(std::size_t)> fn = [&](std::size_t i) {
    Item item;
    const Digraph t = tournament_from_index(n, i);
    if (!is_strong(t)) return item;
    item.strong = true;
    InstanceRecord r = measure_instance(static_cast<std::int64_t>(i), i, t, pairs, config);
    const bool missing = std::any_of(r.verdicts.begin(), r.verdicts.end(),
                                     [](const PairVerdict& v) { return !v.present; });
    if (missing) item.hit = std::move(r);
    return item;
  };
  std::vector<Item> items = parallel_map<Item>(count, workers, fn);
  Problem1Result out;
  out.n = n;
  out.labeled = static_cast<std::int64_t>(count);
  std::set<std::string> classes;
  for (Item& item : items) {
    out.strong += item.strong ? 1 : 0;
    if (item.hit) {
      classes.insert(canonical_form(decode_adjacency(n, item.hit->encoding)));
      out.hits.push_back(std::move(*item.hit));
    }
  }
  out.hit_classes = static_cast<std::int64_t>(classes.size());
  return out;
}

BondyReport audit_bondy(std::span<const Digraph> instances, std::uint64_t seed,
                        const SearchConfig& config, int workers) {
  const std::function<InstanceRecord(std::size_t)> fn = [&](std::size_t i) {
    InstanceRecord r = measure_instance(static_cast<std::int64_t>(i), seed, instances[i], {}, config);
    if (!r.chi || !r.longest_cycle) {
      throw Error(ErrorKind::CapExceeded, "instance " + std::to_string(i) + " beyond the exact caps");
    }
    return r;
  };
  BondyReport out;
  out.records = parallel_map<InstanceRecord>(instances.size(), workers, fn);
  for (const InstanceRecord& r : out.records) {
    if (r.strong && *r.longest_cycle < *r.chi) ++out.violations;
  }
  return out;
}

std::string BwReport::csv() const {
  std::string out = "class,canonical,strong,k,ell,present\n";
  for (const BwRow& r : rows) {
    out += std::to_string(r.class_index) + "," + r.canonical + "," + (r.strong ? "1" : "0") + "," +
           std::to_string(r.k) + "," + std::to_string(r.ell) + "," + (r.present ? "1" : "0") + "\n";
  }
  return out;
}

BwReport audit_bw_claim(int n, const SearchConfig& config) {
  if (n < 4 || n > 6) throw Error(ErrorKind::PreconditionViolated, "audit needs 4 <= n <= 6");
  SearchConfig strict = config;
  strict.strict = true;
  BwReport out;
  out.n = n;
  out.labeled = std::int64_t{1} << (n * (n - 1) / 2);
  // Classes keyed by canonical form so the row order does not depend on
  // which labeled representative came first.
  std::map<std::string, Digraph> classes;
  for (std::int64_t i = 0; i < out.labeled; ++i) {
    Digraph t = tournament_from_index(n, static_cast<std::uint64_t>(i));
    classes.try_emplace(canonical_form(t), std::move(t));
  }
  out.classes = static_cast<int>(classes.size());
  int index = 0;
  for (const auto& [canon, t] : classes) {
    const Digraph rep = decode_adjacency(n, canon);
    for (const PairVerdict& p : problem1_pairs(n)) {
      BwRow row{index, canon, is_strong(rep), p.k, p.ell,
                found(find_two_block_cycle(rep, p.k, p.ell, strict))};
      out.violations += row.present ? 0 : 1;
      out.rows.push_back(row);
    }
    ++index;
  }
  return out;
}

}  // namespace twoblock
