#include "paintbucket/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace paintbucket {

namespace {

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

// Vertex-weighted simple graph on at most 64 vertices.
struct Quotient {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::uint32_t> label;
};

Quotient collapse_twins(const detail::Board& b) {
  std::vector<int> vertices;
  for (std::uint64_t rest = b.alive; rest != 0; rest &= rest - 1) {
    vertices.push_back(std::countr_zero(rest));
  }
  // Classes of (color, neighborhood); the smallest index represents a class.
  std::vector<int> class_of(detail::kMaxBoardVertices, -1);
  std::vector<int> reps;
  std::vector<std::uint32_t> weight;
  for (int v : vertices) {
    int found = -1;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const int r = reps[c];
      if (b.adj[r] == b.adj[v] && b.color(r) == b.color(v)) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(v);
      weight.push_back(0);
    }
    class_of[v] = found;
    ++weight[found];
  }

  Quotient q;
  q.n = static_cast<int>(reps.size());
  q.adj.assign(q.n, 0);
  q.label.resize(q.n);
  for (int c = 0; c < q.n; ++c) {
    const int r = reps[c];
    q.label[c] = weight[c] * 2 + (b.color(r) == Color::White ? 1u : 0u);
    for (std::uint64_t nb = b.adj[r]; nb != 0; nb &= nb - 1) {
      q.adj[c] |= detail::bit(class_of[std::countr_zero(nb)]);
    }
  }
  return q;
}

class Canonizer {
 public:
  explicit Canonizer(const Quotient& q) : q_(q) {}

  std::string run() {
    std::vector<std::uint32_t> sorted = q_.label;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(q_.n);
    for (int v = 0; v < q_.n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), q_.label[v]) -
                                   sorted.begin());
    }
    search(std::move(colors));

    std::string out;
    put_varint(out, static_cast<std::uint64_t>(q_.n));
    std::vector<std::uint32_t> labels = q_.label;
    std::sort(labels.begin(), labels.end());
    for (std::uint32_t l : labels) put_varint(out, l);
    out += best_;
    return out;
  }

 private:
  // Dense ranks of `keys`; returns the number of distinct values.
  template <typename Key>
  static int rank(const std::vector<Key>& keys, std::vector<int>& out) {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int r = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || keys[order[i - 1]] < keys[order[i]]) ++r;
      out[order[i]] = r;
    }
    return r + 1;
  }

  // Iterated refinement by (own color, sorted multiset of neighbor colors).
  int refine(std::vector<int>& colors) const {
    int classes = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> signature(q_.n);
    for (;;) {
      for (int v = 0; v < q_.n; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(colors[v]);
        for (std::uint64_t nb = q_.adj[v]; nb != 0; nb &= nb - 1) {
          sig.push_back(colors[std::countr_zero(nb)]);
        }
        std::sort(sig.begin() + 1, sig.end());
      }
      const int refined = rank(signature, colors);
      if (refined == classes) return classes;
      classes = refined;
    }
  }

  void search(std::vector<int> colors) {
    const int classes = refine(colors);
    if (classes == q_.n) {
      std::string code = encode(colors);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];
    const int target = static_cast<int>(
        std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    for (int v = 0; v < q_.n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> split(q_.n);
      for (int x = 0; x < q_.n; ++x) split[x] = 2 * colors[x] + (x == v ? 0 : 1);
      std::vector<int> dense(q_.n);
      rank(split, dense);
      search(std::move(dense));
    }
  }

  std::string encode(const std::vector<int>& position) const {
    std::vector<int> at(q_.n);
    for (int v = 0; v < q_.n; ++v) at[position[v]] = v;
    std::string code;
    code.reserve(static_cast<std::size_t>(q_.n) * 8);
    for (int i = 0; i < q_.n; ++i) {
      std::uint64_t row = 0;
      for (std::uint64_t nb = q_.adj[at[i]]; nb != 0; nb &= nb - 1) {
        row |= detail::bit(position[std::countr_zero(nb)]);
      }
      put_u64(code, row);
    }
    return code;
  }

  const Quotient& q_;
  std::string best_;
};

}  // namespace

namespace detail {

std::string labeled_form(const Board& b) {
  std::string out;
  out.reserve(16 + 8 * static_cast<std::size_t>(b.size()));
  put_u64(out, b.alive);
  put_u64(out, b.black);
  for (std::uint64_t rest = b.alive; rest != 0; rest &= rest - 1) {
    put_u64(out, b.adj[std::countr_zero(rest)]);
  }
  return out;
}

std::string exact_form(const Board& b) {
  const Quotient q = collapse_twins(b);
  return Canonizer(q).run();
}

}  // namespace detail

CanonicalKey canonical_key(const BipartitePosition& p, MemoMode mode) {
  if (mode == MemoMode::Isomorphism) {
    return {detail::exact_form(detail::to_board(p).board)};
  }
  std::vector<Vertex> vertices = p.graph().vertices();
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::pair(a.color, a.id) < std::pair(b.color, b.id);
  });
  std::string out;
  for (const Vertex& v : vertices) {
    out += v.color == Color::Black ? 'B' : 'W';
    out += std::to_string(v.id);
    out += ';';
  }
  out += '|';
  for (const auto& [a, b] : p.graph().edges()) {
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
    out += ';';
  }
  return {std::move(out)};
}

bool isomorphic(const BipartitePosition& a, const BipartitePosition& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count() ||
      a.count(Color::Black) != b.count(Color::Black)) {
    return false;
  }
  return canonical_key(a, MemoMode::Isomorphism) == canonical_key(b, MemoMode::Isomorphism);
}

}  // namespace paintbucket
