#include "hyperacyclic/orderings.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyperacyclic/errors.hpp"
#include "pq_tree.hpp"

namespace hyperacyclic {

// ---------------------------------------------------------------------------
// Doubly lexical order.
//
// Built in the mirrored convention (rows and columns non-increasing, first
// entry most significant) and reversed at the end. Rows and columns sit in
// ordered parts. Row parts are finished front to back. For the current row
// part R the column parts are walked left to right from R's resume position,
// and at the first part C where the block R x C is not constant:
//  - rows of R that are full, partial and empty on C are split apart in that
//    order when at least two of these groups occur;
//  - otherwise all rows are partial, and C is split into (C & t, C - t) for a
//    row t of R with the most ones in C.
// A constant block stays constant under later splits, so a row part never
// revisits columns left of its resume position.
//
// Bookkeeping. A row part walks a list of its pins sorted by column position
// and grouped by column part. Once a block turns out all partial, the row
// counts on that column part are kept in buckets and updated as rows leave
// and as pieces are cut off the column part, so that peeling rows off a large
// part does not recount it. Every column part logs the pieces cut off its
// front; the pins falling into them are collected when the owner resumes.

namespace {

struct ColPart {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cut;  // position ranges cut off the front
};

struct RowPart {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
  std::uint32_t resume = 0;
  std::uint32_t pool = kNone;
};

struct Pin {
  VertexId row;
  EdgeId col;
  std::uint32_t tag;  // column part when last grouped
};

struct PinList {
  std::vector<Pin> pins;
  std::size_t cursor = 0;
};

// Rows of the owning part sorted by count, bucket k holding count k.
struct Buckets {
  bool on = false;
  std::uint32_t part = kNone;
  std::size_t cuts_seen = 0;
  std::size_t group_end = 0;
  std::vector<VertexId> arr;
  std::vector<std::uint32_t> start;  // start[k] .. start[k+1]
  std::vector<std::uint32_t> alive;
  std::uint32_t top = 0;
};

struct Pool {
  PinList main;
  std::vector<PinList> pending;  // back() is leftmost
  Buckets b;
};

class LexRefiner {
 public:
  explicit LexRefiner(const Hypergraph& h) : h_(h), n_(h.vertex_count()), m_(h.edge_count()) {}

  DoublyLexOrder run();

 private:
  void process(std::uint32_t part);
  void gather(std::uint32_t part);

  enum class Step { stay, next, switch_part };
  Step plain_step(std::uint32_t& cur, PinList& list, bool may_bucket);
  Step bucket_step(std::uint32_t& cur);

  std::size_t group_end(PinList& list);
  std::uint32_t cut_columns(std::uint32_t cp, const std::vector<EdgeId>& cols);
  void collect_cut(std::uint32_t cur, std::uint32_t from, std::uint32_t to, std::vector<Pin>& out);
  void bucket_build(Buckets& b, std::uint32_t cp, std::size_t end);
  void bucket_dec(Buckets& b, VertexId r);
  void bucket_remove(Buckets& b, VertexId r);

  void place_row(VertexId u, std::uint32_t target);
  void place_col(EdgeId c, std::uint32_t target);
  std::uint32_t new_row_part(const std::vector<VertexId>& rows, std::uint32_t start, std::uint32_t resume);

  const Hypergraph& h_;
  std::size_t n_, m_;

  std::vector<std::uint32_t> col_arr_, col_pos_, col_part_;
  std::vector<ColPart> col_parts_;
  std::vector<std::uint32_t> row_arr_, row_pos_, row_part_;
  std::vector<RowPart> row_parts_;
  std::vector<Pool> pools_;

  std::vector<std::uint32_t> count_, count_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> hit_;
  std::vector<std::uint32_t> bcount_, bpos_;  // per row, for the bucket owner
  std::vector<VertexId> full_, partial_, empty_;
  std::vector<EdgeId> cols_;
};

void LexRefiner::place_row(VertexId u, std::uint32_t target) {
  const std::uint32_t from = row_pos_[u];
  const VertexId w = row_arr_[target];
  row_arr_[target] = u;
  row_pos_[u] = target;
  row_arr_[from] = w;
  row_pos_[w] = from;
}

void LexRefiner::place_col(EdgeId c, std::uint32_t target) {
  const std::uint32_t from = col_pos_[c];
  const EdgeId w = col_arr_[target];
  col_arr_[target] = c;
  col_pos_[c] = target;
  col_arr_[from] = w;
  col_pos_[w] = from;
}

std::uint32_t LexRefiner::new_row_part(const std::vector<VertexId>& rows, std::uint32_t start,
                                       std::uint32_t resume) {
  const auto id = static_cast<std::uint32_t>(row_parts_.size());
  for (std::uint32_t q = 0; q < rows.size(); ++q) {
    place_row(rows[q], start + q);
    row_part_[rows[q]] = id;
  }
  row_parts_.push_back({start, start + static_cast<std::uint32_t>(rows.size()), resume, kNone});
  return id;
}

std::uint32_t LexRefiner::cut_columns(std::uint32_t cp, const std::vector<EdgeId>& cols) {
  const auto np = static_cast<std::uint32_t>(col_parts_.size());
  const std::uint32_t start = col_parts_[cp].start;
  const auto k = static_cast<std::uint32_t>(cols.size());
  for (std::uint32_t q = 0; q < k; ++q) {
    place_col(cols[q], start + q);
    col_part_[cols[q]] = np;
  }
  col_parts_[cp].start = start + k;
  col_parts_[cp].cut.emplace_back(start, start + k);
  col_parts_.push_back({start, start + k, {}});
  return np;
}

void LexRefiner::gather(std::uint32_t part) {
  const auto id = static_cast<std::uint32_t>(pools_.size());
  pools_.emplace_back();
  const RowPart& rp = row_parts_[part];
  auto& pins = pools_.back().main.pins;
  for (std::uint32_t pos = rp.start; pos < rp.end; ++pos) {
    const VertexId r = row_arr_[pos];
    for (EdgeId c : h_.incident(r)) {
      if (col_pos_[c] >= rp.resume) pins.push_back({r, c, col_part_[c]});
    }
  }
  std::sort(pins.begin(), pins.end(), [&](const Pin& a, const Pin& b) { return col_pos_[a.col] < col_pos_[b.col]; });
  row_parts_[part].pool = id;
}

/// End of the group at the cursor, re-sorting it first if its column part
/// has been split since it was tagged.
std::size_t LexRefiner::group_end(PinList& list) {
  auto& pins = list.pins;
  const std::size_t idx = list.cursor;
  std::size_t j = idx;
  bool stale = false;
  while (j < pins.size() && pins[j].tag == pins[idx].tag) {
    stale = stale || col_part_[pins[j].col] != pins[j].tag;
    ++j;
  }
  if (!stale) return j;
  std::sort(pins.begin() + static_cast<std::ptrdiff_t>(idx), pins.begin() + static_cast<std::ptrdiff_t>(j),
            [&](const Pin& a, const Pin& b) { return col_pos_[a.col] < col_pos_[b.col]; });
  for (std::size_t q = idx; q < j; ++q) pins[q].tag = col_part_[pins[q].col];
  j = idx;
  while (j < pins.size() && pins[j].tag == pins[idx].tag) ++j;
  return j;
}

void LexRefiner::collect_cut(std::uint32_t cur, std::uint32_t from, std::uint32_t to, std::vector<Pin>& out) {
  for (std::uint32_t pos = from; pos < to; ++pos) {
    const EdgeId c = col_arr_[pos];
    for (VertexId r : h_.edge(c)) {
      if (row_part_[r] == cur) out.push_back({r, c, col_part_[c]});
    }
  }
}

void LexRefiner::bucket_build(Buckets& b, std::uint32_t cp, std::size_t end) {
  std::uint32_t maxc = 0;
  for (VertexId r : hit_) maxc = std::max(maxc, count_[r]);
  b.on = true;
  b.part = cp;
  b.cuts_seen = col_parts_[cp].cut.size();
  b.group_end = end;
  b.start.assign(maxc + 2, 0);
  for (VertexId r : hit_) ++b.start[count_[r] + 1];
  for (std::uint32_t k = 1; k < b.start.size(); ++k) b.start[k] += b.start[k - 1];
  b.alive.assign(maxc + 1, 0);
  b.arr.assign(hit_.size(), 0);
  std::vector<std::uint32_t> fill(b.start.begin(), b.start.end() - 1);
  for (VertexId r : hit_) {
    const std::uint32_t k = count_[r];
    bcount_[r] = k;
    bpos_[r] = fill[k];
    b.arr[fill[k]++] = r;
    ++b.alive[k];
  }
  b.top = maxc;
}

void LexRefiner::bucket_dec(Buckets& b, VertexId r) {
  const std::uint32_t k = bcount_[r];
  const std::uint32_t first = b.start[k];
  const VertexId w = b.arr[first];
  b.arr[first] = r;
  b.arr[bpos_[r]] = w;
  bpos_[w] = bpos_[r];
  bpos_[r] = first;
  ++b.start[k];
  --b.alive[k];
  ++b.alive[k - 1];
  --bcount_[r];
}

void LexRefiner::bucket_remove(Buckets& b, VertexId r) {
  while (bcount_[r] > 0) bucket_dec(b, r);
  --b.alive[0];
}

LexRefiner::Step LexRefiner::plain_step(std::uint32_t& cur, PinList& list, bool may_bucket) {
  Pool& pool = pools_[row_parts_[cur].pool];
  const std::size_t idx = list.cursor;
  const std::size_t j = group_end(list);
  auto& pins = list.pins;
  const std::uint32_t cp = pins[idx].tag;

  ++stamp_;
  hit_.clear();
  for (std::size_t q = idx; q < j; ++q) {
    const VertexId r = pins[q].row;
    if (row_part_[r] != cur) continue;
    if (count_stamp_[r] != stamp_) {
      count_stamp_[r] = stamp_;
      count_[r] = 0;
      hit_.push_back(r);
    }
    ++count_[r];
  }
  const ColPart& cpart = col_parts_[cp];
  const std::uint32_t width = cpart.end - cpart.start;
  const std::uint32_t rows = row_parts_[cur].end - row_parts_[cur].start;
  const auto hits = static_cast<std::uint32_t>(hit_.size());
  full_.clear();
  partial_.clear();
  for (VertexId r : hit_) (count_[r] == width ? full_ : partial_).push_back(r);
  if (hits == 0 || full_.size() == rows) {
    list.cursor = j;
    return Step::next;
  }

  if (!full_.empty() || hits < rows) {
    // Hit rows move out in front; the rest keeps the id, the list and any
    // buckets.
    if (pool.b.on) {
      for (VertexId r : hit_) bucket_remove(pool.b, r);
    }
    const std::uint32_t base = row_parts_[cur].start;
    const std::uint32_t resume = cpart.start;
    std::uint32_t first = kNone;
    if (!full_.empty()) first = new_row_part(full_, base, resume);
    if (!partial_.empty()) {
      const std::uint32_t p = new_row_part(partial_, base + static_cast<std::uint32_t>(full_.size()), resume);
      if (first == kNone) first = p;
    }
    row_parts_[cur].start = base + hits;
    row_parts_[cur].resume = resume;
    list.cursor = j;  // the rest is empty on this group
    if (!pool.b.on) {
      // No buckets yet: the list goes to the side with the most rows.
      const auto rest = rows - hits;
      const auto nf = static_cast<std::uint32_t>(full_.size()), np = static_cast<std::uint32_t>(partial_.size());
      std::uint32_t keeper = cur;
      if (nf > rest && nf >= np) {
        keeper = row_part_[full_[0]];
      } else if (np > rest && np > nf) {
        keeper = row_part_[partial_[0]];
        list.cursor = idx;
      }
      if (keeper != cur) {
        row_parts_[keeper].pool = row_parts_[cur].pool;
        row_parts_[cur].pool = kNone;
      }
    } else if (hits == rows) {
      pool = Pool{};
      row_parts_[cur].pool = kNone;
    }
    cur = first;
    return Step::switch_part;
  }

  // All rows partial.
  if (may_bucket) {
    bucket_build(pool.b, cp, j);
    return Step::stay;
  }
  const VertexId t = *std::max_element(hit_.begin(), hit_.end(),
                                       [&](VertexId a, VertexId b) { return count_[a] < count_[b]; });
  cols_.clear();
  for (std::size_t q = idx; q < j; ++q) {
    if (pins[q].row == t) cols_.push_back(pins[q].col);
  }
  const std::uint32_t np = cut_columns(cp, cols_);
  std::stable_partition(pins.begin() + static_cast<std::ptrdiff_t>(idx), pins.begin() + static_cast<std::ptrdiff_t>(j),
                        [&](const Pin& x) { return col_part_[x.col] == np; });
  for (std::size_t q = idx; q < j && col_part_[pins[q].col] == np; ++q) pins[q].tag = np;
  return Step::stay;
}

LexRefiner::Step LexRefiner::bucket_step(std::uint32_t& cur) {
  Pool& pool = pools_[row_parts_[cur].pool];
  Buckets& b = pool.b;
  const std::uint32_t cp = b.part;

  // Pieces cut off the part since the last visit come first.
  if (b.cuts_seen < col_parts_[cp].cut.size()) {
    PinList piece;
    for (std::size_t q = b.cuts_seen; q < col_parts_[cp].cut.size(); ++q) {
      const auto [from, to] = col_parts_[cp].cut[q];
      collect_cut(cur, from, to, piece.pins);
    }
    b.cuts_seen = col_parts_[cp].cut.size();
    for (const Pin& p : piece.pins) bucket_dec(b, p.row);
    if (!piece.pins.empty()) {
      std::sort(piece.pins.begin(), piece.pins.end(),
                [&](const Pin& x, const Pin& y) { return col_pos_[x.col] < col_pos_[y.col]; });
      pool.pending.push_back(std::move(piece));
    }
    return Step::stay;
  }

  const ColPart& cpart = col_parts_[cp];
  const std::uint32_t width = cpart.end - cpart.start;
  while (b.top > 0 && b.alive[b.top] == 0) --b.top;
  const std::uint32_t rows = row_parts_[cur].end - row_parts_[cur].start;
  const std::uint32_t empty = b.alive[0];
  const std::uint32_t full = b.top == width ? b.alive[b.top] : 0;
  if (empty == rows || full == rows) {
    b = Buckets{};
    pool.main.cursor = b.group_end;
    return Step::next;
  }

  if (full > 0 || empty > 0) {
    const std::uint32_t partial = rows - full - empty;
    enum Side { F, P, E };
    Side keep = P;
    if (full > partial && full >= empty) keep = F;
    else if (empty > partial && empty > full) keep = E;

    full_.clear();
    partial_.clear();
    empty_.clear();
    if (keep != F && full > 0) {
      for (std::uint32_t q = b.start[width]; q < b.start[width + 1]; ++q) full_.push_back(b.arr[q]);
    }
    if (keep != P && partial > 0) {
      const std::uint32_t hi = std::min<std::uint32_t>(width, b.top + 1);
      for (std::uint32_t q = b.start[1]; q < b.start[hi]; ++q) partial_.push_back(b.arr[q]);
    }
    if (keep != E && empty > 0) {
      for (std::uint32_t q = b.start[0]; q < b.start[1]; ++q) {
        if (row_part_[b.arr[q]] == cur) empty_.push_back(b.arr[q]);
      }
    }

    const std::uint32_t s = row_parts_[cur].start, e = row_parts_[cur].end;
    const std::uint32_t resume = cpart.start;
    std::uint32_t f_id = kNone, p_id = kNone;
    if (keep != F && full > 0) f_id = new_row_part(full_, s, resume);
    if (keep != P && partial > 0) p_id = new_row_part(partial_, s + full, resume);
    if (keep != E && empty > 0) new_row_part(empty_, e - empty, resume);
    switch (keep) {
      case F:
        row_parts_[cur].end = s + full;
        f_id = cur;
        break;
      case P:
        row_parts_[cur].start = s + full;
        row_parts_[cur].end = e - empty;
        p_id = cur;
        break;
      case E:
        row_parts_[cur].start = e - empty;
        break;
    }
    row_parts_[cur].resume = resume;

    if (keep == P) {
      if (full > 0) b.alive[width] = 0;
      b.alive[0] = 0;
      b.start[0] = b.start[1];
    } else {
      pool.main.cursor = b.group_end;
      b = Buckets{};
    }
    const std::uint32_t first = full > 0 ? f_id : p_id;
    if (first == cur) return Step::stay;
    cur = first;
    return Step::switch_part;
  }

  // All rows partial: cut the part by a row with the most ones.
  const VertexId t = b.arr[b.start[b.top]];
  cols_.clear();
  for (EdgeId c : h_.incident(t)) {
    if (col_part_[c] == cp) cols_.push_back(c);
  }
  const std::uint32_t np = cut_columns(cp, cols_);
  b.cuts_seen = col_parts_[cp].cut.size();
  PinList piece;
  const ColPart& npart = col_parts_[np];
  collect_cut(cur, npart.start, npart.end, piece.pins);
  for (const Pin& p : piece.pins) bucket_dec(b, p.row);
  pool.pending.push_back(std::move(piece));
  return Step::stay;
}

void LexRefiner::process(std::uint32_t part) {
  std::uint32_t cur = part;
  for (;;) {
    if (row_parts_[cur].pool == kNone) gather(cur);
    Pool& pool = pools_[row_parts_[cur].pool];
    Step step;
    if (!pool.pending.empty()) {
      PinList& list = pool.pending.back();
      if (list.cursor == list.pins.size()) {
        pool.pending.pop_back();
        continue;
      }
      step = plain_step(cur, list, false);
    } else if (pool.b.on) {
      step = bucket_step(cur);
    } else if (pool.main.cursor < pool.main.pins.size()) {
      step = plain_step(cur, pool.main, true);
    } else {
      // Finished; no other part holds this pool.
      pool = Pool{};
      row_parts_[cur].pool = kNone;
      return;
    }
    (void)step;
  }
}

DoublyLexOrder LexRefiner::run() {
  col_arr_.resize(m_);
  col_pos_.resize(m_);
  col_part_.assign(m_, 0);
  for (EdgeId e = 0; e < m_; ++e) col_arr_[e] = col_pos_[e] = e;
  col_parts_.push_back({0, static_cast<std::uint32_t>(m_), {}});

  row_arr_.resize(n_);
  row_pos_.resize(n_);
  row_part_.assign(n_, 0);
  for (VertexId v = 0; v < n_; ++v) row_arr_[v] = row_pos_[v] = v;
  row_parts_.push_back({0, static_cast<std::uint32_t>(n_), 0, kNone});
  count_.assign(n_, 0);
  count_stamp_.assign(n_, 0);
  bcount_.assign(n_, 0);
  bpos_.assign(n_, 0);

  for (std::uint32_t pos = 0; pos < n_;) {
    process(row_part_[row_arr_[pos]]);
    pos = row_parts_[row_part_[row_arr_[pos]]].end;
  }

  DoublyLexOrder out;
  out.vertex_order.assign(row_arr_.rbegin(), row_arr_.rend());
  out.edge_order.assign(col_arr_.rbegin(), col_arr_.rend());
  out.edge_rank.assign(m_, 0);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < out.edge_order.size(); ++i) {
    if (i > 0 && col_part_[out.edge_order[i]] != col_part_[out.edge_order[i - 1]]) ++rank;
    out.edge_rank[out.edge_order[i]] = rank;
  }
  return out;
}

template <typename Id>
std::optional<std::vector<std::uint32_t>> positions_of(const std::vector<Id>& order, std::size_t count) {
  if (order.size() != count) return std::nullopt;
  std::vector<std::uint32_t> pos(count, kNone);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (order[i] >= count || pos[order[i]] != kNone) return std::nullopt;
    pos[order[i]] = i;
  }
  return pos;
}

}  // namespace

DoublyLexOrder doubly_lexical_order(const Hypergraph& h) { return LexRefiner(h).run(); }

bool is_doubly_lexical(const Hypergraph& h, const DoublyLexOrder& ord) {
  const auto vpos = positions_of(ord.vertex_order, h.vertex_count());
  const auto epos = positions_of(ord.edge_order, h.edge_count());
  if (!vpos || !epos) return false;

  // With the last entry most significant, a <= b iff the descending list of
  // a's one-positions is lexicographically <= b's.
  auto descending = [](auto ids, const std::vector<std::uint32_t>& pos) {
    std::vector<std::uint32_t> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(pos[id]);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  };
  for (std::size_t i = 1; i < ord.vertex_order.size(); ++i) {
    const auto a = descending(h.incident(ord.vertex_order[i - 1]), *epos);
    const auto b = descending(h.incident(ord.vertex_order[i]), *epos);
    if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return false;
  }
  for (std::size_t i = 1; i < ord.edge_order.size(); ++i) {
    const auto a = descending(h.edge(ord.edge_order[i - 1]), *vpos);
    const auto b = descending(h.edge(ord.edge_order[i]), *vpos);
    if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return false;
  }
  return true;
}

bool is_gamma_free(const Hypergraph& h, const DoublyLexOrder& ord) {
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  if (!positions_of(ord.vertex_order, n) || !positions_of(ord.edge_order, m)) {
    throw InvalidInput("is_gamma_free: orders are not permutations of the ids");
  }

  // Row lists in column order and column lists in row order.
  std::vector<std::vector<EdgeId>> row(n);
  for (EdgeId e : ord.edge_order) {
    for (VertexId v : h.edge(e)) row[v].push_back(e);
  }
  std::vector<std::vector<VertexId>> col(m);
  for (VertexId v : ord.vertex_order) {
    for (EdgeId e : h.incident(v)) col[e].push_back(v);
  }

  // right[v][k]: next 1 to the right of entry (v, incident(v)[k]).
  std::vector<std::vector<EdgeId>> right(n);
  for (VertexId v = 0; v < n; ++v) {
    auto inc = h.incident(v);
    right[v].assign(inc.size(), kNone);
    for (std::size_t i = 0; i + 1 < row[v].size(); ++i) {
      const auto k = std::lower_bound(inc.begin(), inc.end(), row[v][i]) - inc.begin();
      right[v][k] = row[v][i + 1];
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    for (std::size_t i = 0; i + 1 < col[e].size(); ++i) {
      const VertexId v = col[e][i];
      const VertexId below = col[e][i + 1];
      auto inc = h.incident(v);
      const EdgeId r = right[v][std::lower_bound(inc.begin(), inc.end(), e) - inc.begin()];
      if (r != kNone && !h.contains(r, below)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pruning sequence: repeatedly delete a pendant node or one of two false
// twins from the incidence graph. Twins are found through an additive hash of
// random node keys over the live neighbourhood and then compared exactly.
//
// Everything lives in flat arrays. Each node's live neighbours are a prefix
// of its adjacency slice; a deleted pin is swapped behind the prefix. Nodes
// with equal hash share a bucket, an intrusive list that also remembers its
// smallest member.

namespace {

/// Open addressing map from a 64-bit hash to a bucket id. Keys are random,
/// so the low bits index directly.
class HashIndex {
 public:
  explicit HashIndex(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, 0);
    vals_.assign(cap, kNone);
    mask_ = cap - 1;
  }

  std::uint32_t find(std::uint64_t key) const {
    for (std::size_t i = key & mask_;; i = (i + 1) & mask_) {
      if (vals_[i] == kNone) return kNone;
      if (keys_[i] == key) return vals_[i];
    }
  }

  void insert(std::uint64_t key, std::uint32_t val) {
    std::size_t i = key & mask_;
    while (vals_[i] != kNone) i = (i + 1) & mask_;
    keys_[i] = key;
    vals_[i] = val;
  }

  /// Backward-shift deletion keeps probe runs intact without tombstones.
  void erase(std::uint64_t key) {
    std::size_t i = key & mask_;
    while (keys_[i] != key || vals_[i] == kNone) i = (i + 1) & mask_;
    for (std::size_t j = (i + 1) & mask_; vals_[j] != kNone; j = (j + 1) & mask_) {
      const std::size_t home = keys_[j] & mask_;
      // Move j into the hole at i unless its home lies cyclically in (i, j].
      if (((j - home) & mask_) >= ((j - i) & mask_)) {
        keys_[i] = keys_[j];
        vals_[i] = vals_[j];
        i = j;
      }
    }
    vals_[i] = kNone;
  }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_ = 0;
};

class Pruner {
 public:
  explicit Pruner(const Hypergraph& h);
  std::optional<PruningSequence> run();

 private:
  IncidenceNode to_node(std::uint32_t x) const {
    return x < n_ ? IncidenceNode{false, x} : IncidenceNode{true, x - n_};
  }
  std::uint32_t first_live(std::uint32_t x) const { return nbr_[off_[x]]; }

  void bucket_insert(std::uint32_t x);
  void bucket_remove(std::uint32_t x);
  std::uint32_t bucket_min(std::uint32_t b);
  bool twins(std::uint32_t a, std::uint32_t b);
  bool try_remove(std::uint32_t x);
  void remove(std::uint32_t x, PruneKind kind, std::uint32_t witness);

  std::uint32_t n_ = 0, total_ = 0;
  Components comps_;
  std::vector<std::uint32_t> comp_, live_in_comp_;
  std::vector<std::uint32_t> off_;
  std::vector<std::uint32_t> nbr_;
  std::vector<std::uint32_t> rev_;  // slot of the same pin in the other endpoint
  std::vector<std::uint32_t> deg_;
  std::vector<std::uint64_t> key_, hash_;
  std::vector<bool> alive_;
  std::vector<std::uint32_t> mark_;

  HashIndex index_;
  std::vector<std::uint32_t> bucket_of_, next_, prev_;
  std::vector<std::uint64_t> b_key_;
  std::vector<std::uint32_t> b_head_, b_count_, b_min_, free_buckets_;
  std::vector<bool> b_dirty_;  // the smallest member left; rescan on demand

  std::vector<std::uint32_t> queue_;
  std::vector<std::vector<PruningStep>> removed_;
};

Pruner::Pruner(const Hypergraph& h)
    : n_(static_cast<std::uint32_t>(h.vertex_count())),
      total_(static_cast<std::uint32_t>(h.vertex_count() + h.edge_count())),
      comps_(connected_components(h)),
      index_(h.vertex_count() + h.edge_count()) {
  const std::uint32_t m = total_ - n_;
  off_.assign(total_ + 1, 0);
  for (VertexId v = 0; v < n_; ++v) off_[v + 1] = off_[v] + static_cast<std::uint32_t>(h.degree(v));
  for (EdgeId e = 0; e < m; ++e) off_[n_ + e + 1] = off_[n_ + e] + static_cast<std::uint32_t>(h.edge_size(e));
  nbr_.resize(off_[total_]);
  rev_.resize(off_[total_]);
  deg_.resize(total_);
  for (std::uint32_t x = 0; x < total_; ++x) deg_[x] = static_cast<std::uint32_t>(off_[x + 1] - off_[x]);
  std::vector<std::uint32_t> fill(off_.begin(), off_.end() - 1);
  for (VertexId v = 0; v < n_; ++v) {
    for (EdgeId e : h.incident(v)) {
      const std::uint32_t a = fill[v]++, b = fill[n_ + e]++;
      nbr_[a] = n_ + e;
      nbr_[b] = v;
      rev_[a] = b;
      rev_[b] = a;
    }
  }

  comp_.resize(total_);
  live_in_comp_.assign(comps_.count, 0);
  for (std::uint32_t x = 0; x < total_; ++x) {
    comp_[x] = x < n_ ? comps_.of_vertex[x] : comps_.of_edge[x - n_];
    ++live_in_comp_[comp_[x]];
  }

  std::mt19937_64 rng(0x6a09e667f3bcc909ULL);
  key_.resize(total_);
  for (auto& k : key_) k = rng();
  hash_.assign(total_, 0);
  for (std::uint32_t x = 0; x < total_; ++x) {
    for (std::uint32_t s = off_[x]; s < off_[x + 1]; ++s) hash_[x] += key_[nbr_[s]];
  }
  alive_.assign(total_, true);
  mark_.assign(total_, kNone);
  bucket_of_.assign(total_, kNone);
  next_.assign(total_, kNone);
  prev_.assign(total_, kNone);
  for (std::uint32_t x = 0; x < total_; ++x) bucket_insert(x);
  removed_.resize(comps_.count);
}

void Pruner::bucket_insert(std::uint32_t x) {
  std::uint32_t b = index_.find(hash_[x]);
  if (b == kNone) {
    if (free_buckets_.empty()) {
      b = static_cast<std::uint32_t>(b_key_.size());
      b_key_.push_back(0);
      b_head_.push_back(kNone);
      b_count_.push_back(0);
      b_min_.push_back(kNone);
      b_dirty_.push_back(false);
    } else {
      b = free_buckets_.back();
      free_buckets_.pop_back();
    }
    b_key_[b] = hash_[x];
    b_head_[b] = kNone;
    b_count_[b] = 0;
    b_min_[b] = kNone;
    b_dirty_[b] = false;
    index_.insert(hash_[x], b);
  }
  bucket_of_[x] = b;
  prev_[x] = kNone;
  next_[x] = b_head_[b];
  if (next_[x] != kNone) prev_[next_[x]] = x;
  b_head_[b] = x;
  ++b_count_[b];
  if (!b_dirty_[b]) b_min_[b] = std::min(b_min_[b], x);
}

void Pruner::bucket_remove(std::uint32_t x) {
  const std::uint32_t b = bucket_of_[x];
  if (prev_[x] != kNone) {
    next_[prev_[x]] = next_[x];
  } else {
    b_head_[b] = next_[x];
  }
  if (next_[x] != kNone) prev_[next_[x]] = prev_[x];
  bucket_of_[x] = kNone;
  if (b_min_[b] == x) b_dirty_[b] = true;
  if (--b_count_[b] == 0) {
    index_.erase(b_key_[b]);
    free_buckets_.push_back(b);
  }
}

std::uint32_t Pruner::bucket_min(std::uint32_t b) {
  if (!b_dirty_[b]) return b_min_[b];
  std::uint32_t best = kNone;
  for (std::uint32_t y = b_head_[b]; y != kNone; y = next_[y]) best = std::min(best, y);
  b_min_[b] = best;
  b_dirty_[b] = false;
  return best;
}

bool Pruner::twins(std::uint32_t a, std::uint32_t b) {
  if (deg_[a] != deg_[b] || (a < n_) != (b < n_)) return false;
  for (std::uint32_t s = off_[a]; s < off_[a] + deg_[a]; ++s) mark_[nbr_[s]] = a;
  for (std::uint32_t s = off_[b]; s < off_[b] + deg_[b]; ++s) {
    if (mark_[nbr_[s]] != a) return false;
  }
  return true;
}

void Pruner::remove(std::uint32_t x, PruneKind kind, std::uint32_t witness) {
  alive_[x] = false;
  --live_in_comp_[comp_[x]];
  removed_[comp_[x]].push_back({to_node(x), kind, to_node(witness)});
  bucket_remove(x);
  for (std::uint32_t s = off_[x]; s < off_[x] + deg_[x]; ++s) {
    const std::uint32_t y = nbr_[s];
    const std::uint32_t r = rev_[s];
    const std::uint32_t last = off_[y] + --deg_[y];
    if (r != last) {
      nbr_[r] = nbr_[last];
      rev_[r] = rev_[last];
      rev_[rev_[r]] = r;
      nbr_[last] = x;
      rev_[last] = s;
    }
    bucket_remove(y);
    hash_[y] -= key_[x];
    bucket_insert(y);
    if (deg_[y] == 1 || b_count_[bucket_of_[y]] >= 2) queue_.push_back(y);
  }
}

bool Pruner::try_remove(std::uint32_t x) {
  if (!alive_[x] || live_in_comp_[comp_[x]] <= 2) return false;
  if (deg_[x] == 1) {
    remove(x, PruneKind::pendant, first_live(x));
    return true;
  }
  const std::uint32_t b = bucket_of_[x];
  if (b_count_[b] < 2) return false;
  // Drop a member other than the smallest and name the smallest as its
  // twin, so the smallest stays put for the rest of the class.
  const std::uint32_t low = bucket_min(b);
  std::uint32_t victim = x;
  if (victim == low) {
    victim = b_head_[b] == low ? next_[low] : b_head_[b];
  }
  if (twins(victim, low)) {
    remove(victim, PruneKind::false_twin, low);
    return true;
  }
  // Hash collision: search the bucket for the smallest real twin of x.
  std::uint32_t best = kNone;
  for (std::uint32_t y = b_head_[b]; y != kNone; y = next_[y]) {
    if (y != x && y < best && twins(x, y)) best = y;
  }
  if (best == kNone) return false;
  remove(x, PruneKind::false_twin, best);
  return true;
}

std::optional<PruningSequence> Pruner::run() {
  queue_.reserve(2 * total_);
  for (std::uint32_t x = 0; x < total_; ++x) queue_.push_back(x);
  for (;;) {
    for (std::size_t i = 0; i < queue_.size(); ++i) try_remove(queue_[i]);
    queue_.clear();
    bool progress = false;
    for (std::uint32_t x = 0; x < total_; ++x) progress |= try_remove(x);
    if (!progress) break;
  }

  PruningSequence seq;
  std::vector<std::uint32_t> base_vertex(comps_.count, kNone), base_edge(comps_.count, kNone);
  for (std::uint32_t x = 0; x < total_; ++x) {
    if (!alive_[x]) continue;
    if (live_in_comp_[comp_[x]] != 2) return std::nullopt;
    (x < n_ ? base_vertex : base_edge)[comp_[x]] = x;
  }
  for (std::uint32_t c = 0; c < comps_.count; ++c) {
    const IncidenceNode v = to_node(base_vertex[c]);
    seq.steps.push_back({v, PruneKind::base, {}});
    seq.steps.push_back({to_node(base_edge[c]), PruneKind::base, v});
    seq.steps.insert(seq.steps.end(), removed_[c].rbegin(), removed_[c].rend());
  }
  return seq;
}

}  // namespace

std::optional<PruningSequence> pruning_sequence(const Hypergraph& h) { return Pruner(h).run(); }

// ---------------------------------------------------------------------------
// Interval orders.

std::optional<IntervalOrder> make_interval_order(const Hypergraph& h, std::vector<EdgeId> order) {
  auto pos = positions_of(order, h.edge_count());
  if (!pos) return std::nullopt;
  IntervalOrder out;
  out.edge_order = std::move(order);
  out.position = std::move(*pos);
  out.leftmost.assign(h.vertex_count(), kNone);
  out.rightmost.assign(h.vertex_count(), 0);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    for (EdgeId e : h.incident(v)) {
      out.leftmost[v] = std::min(out.leftmost[v], out.position[e]);
      out.rightmost[v] = std::max(out.rightmost[v], out.position[e]);
    }
    if (out.rightmost[v] - out.leftmost[v] + 1 != h.degree(v)) return std::nullopt;
  }
  return out;
}

// A consecutive order is itself a path join tree, so no separate
// acyclicity test is needed.
std::optional<IntervalOrder> interval_order(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  detail::PQTree tree(m);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const std::size_t d = h.degree(v);
    if (d < 2 || d == m) continue;
    if (!tree.reduce(h.incident(v))) return std::nullopt;
  }
  auto out = make_interval_order(h, tree.frontier());
  if (!out) throw std::logic_error("interval_order: PQ-tree frontier violates a reduced constraint");
  return out;
}

}  // namespace hyperacyclic
