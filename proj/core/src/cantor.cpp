#include "ropen/cantor.hpp"

#include <algorithm>

#include "ropen/errors.hpp"
#include "ropen/random.hpp"

namespace ropen::cantor {

namespace {

// Word lengths beyond this do not fit the integer cylinder arithmetic.
constexpr std::size_t kMaxLength = 62;

// Half-open index run [lo, hi) of length-`depth` cylinders.
using Run = std::pair<std::uint64_t, std::uint64_t>;

void require_length(std::size_t length) {
  if (length > kMaxLength) {
    throw Error(ErrorCode::TooLarge, "words longer than " + std::to_string(kMaxLength) + " bits are not supported");
  }
}

std::vector<Run> merge_runs(std::vector<Run> runs) {
  std::sort(runs.begin(), runs.end());
  std::vector<Run> out;
  for (const auto& r : runs) {
    if (!out.empty() && r.first <= out.back().second) {
      out.back().second = std::max(out.back().second, r.second);
    } else {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Run> to_runs(const CantorClopen& k, std::size_t depth) {
  std::vector<Run> runs;
  runs.reserve(k.words().size());
  for (const auto& w : k.words()) {
    const std::size_t shift = depth - w.length();
    runs.emplace_back(w.index() << shift, (w.index() + 1) << shift);
  }
  return merge_runs(std::move(runs));
}

// Greedy decomposition into maximal aligned blocks; for merged runs this is
// the unique antichain with no sibling pair.
CantorClopen from_runs(const std::vector<Run>& runs, std::size_t depth);

}  // namespace

// Friend-free construction path: words are already canonical.
struct ClopenAccess {
  static CantorClopen make(std::vector<Word> words) {
    CantorClopen k;
    k.words_ = std::move(words);
    return k;
  }
};

namespace {

CantorClopen from_runs(const std::vector<Run>& runs, std::size_t depth) {
  std::vector<Word> words;
  for (auto [lo, hi] : runs) {
    while (lo < hi) {
      std::size_t level = 0;  // block size 2^level
      while (level < depth && (lo & ((std::uint64_t{1} << (level + 1)) - 1)) == 0 &&
             lo + (std::uint64_t{1} << (level + 1)) <= hi) {
        ++level;
      }
      words.push_back(Word::from_index(lo >> level, depth - level));
      lo += std::uint64_t{1} << level;
    }
  }
  return ClopenAccess::make(std::move(words));
}

std::size_t common_depth(const CantorClopen& a, const CantorClopen& b) {
  return std::max(a.max_length(), b.max_length());
}

}  // namespace

Word::Word(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw Error(ErrorCode::InvalidInput, "word '" + bits_ + "' is not binary");
  }
  require_length(bits_.size());
}

std::uint64_t Word::index() const {
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

Word Word::from_index(std::uint64_t index, std::size_t length) {
  std::string bits(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((index >> (length - 1 - i)) & 1U) bits[i] = '1';
  }
  return Word(std::move(bits));
}

CantorClopen CantorClopen::from_words(std::vector<Word> words) {
  std::size_t depth = 0;
  for (const auto& w : words) depth = std::max(depth, w.length());
  std::vector<Run> runs;
  runs.reserve(words.size());
  for (const auto& w : words) {
    const std::size_t shift = depth - w.length();
    runs.emplace_back(w.index() << shift, (w.index() + 1) << shift);
  }
  return from_runs(merge_runs(std::move(runs)), depth);
}

std::size_t CantorClopen::max_length() const {
  std::size_t d = 0;
  for (const auto& w : words_) d = std::max(d, w.length());
  return d;
}

std::string CantorClopen::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + words_[i].bits() + "\"";
  }
  return out + "}";
}

CantorClopen clopen_union(const CantorClopen& a, const CantorClopen& b) {
  const std::size_t depth = common_depth(a, b);
  std::vector<Run> runs = to_runs(a, depth);
  const auto more = to_runs(b, depth);
  runs.insert(runs.end(), more.begin(), more.end());
  return from_runs(merge_runs(std::move(runs)), depth);
}

CantorClopen clopen_inter(const CantorClopen& a, const CantorClopen& b) {
  const std::size_t depth = common_depth(a, b);
  const auto ra = to_runs(a, depth);
  const auto rb = to_runs(b, depth);
  std::vector<Run> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ra.size() && j < rb.size()) {
    const std::uint64_t lo = std::max(ra[i].first, rb[j].first);
    const std::uint64_t hi = std::min(ra[i].second, rb[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (ra[i].second < rb[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return from_runs(merge_runs(std::move(out)), depth);
}

CantorClopen clopen_compl(const CantorClopen& k) {
  const std::size_t depth = k.max_length();
  const std::uint64_t end = std::uint64_t{1} << depth;
  std::vector<Run> out;
  std::uint64_t cursor = 0;
  for (const auto& [lo, hi] : to_runs(k, depth)) {
    if (cursor < lo) out.emplace_back(cursor, lo);
    cursor = hi;
  }
  if (cursor < end) out.emplace_back(cursor, end);
  return from_runs(out, depth);
}

std::pair<Rational, Rational> value_interval(const Word& w) {
  const Rational unit = Rational::dyadic(static_cast<unsigned>(w.length()));
  const Rational lo = Rational(static_cast<long>(w.index())) * unit;
  return {lo, lo + unit};
}

const SpaceRef& unit_interval() {
  static const SpaceRef space = make_interval_space(0, 1);
  return space;
}

RopenElem psi_c(const CantorClopen& k) {
  std::vector<Span> raw;
  raw.reserve(k.words().size());
  for (const auto& w : k.words()) {
    auto [lo, hi] = value_interval(w);
    raw.push_back(Span::closed(std::move(lo), std::move(hi)));
  }
  return RopenElem::from_region(interior(make_region(unit_interval(), raw)));
}

CantorClopen phi_c(const RopenElem& v) {
  if (!same_space(v.space(), unit_interval())) {
    throw Error(ErrorCode::SpaceMismatch, "the binary cover targets [0,1], got " + v.space()->str());
  }
  unsigned depth = 0;
  for (const auto& s : v.region().spans()) {
    for (const Rational* e : {&s.lo, &s.hi}) {
      const auto k = e->dyadic_exponent();
      if (!k) throw Error(ErrorCode::NonDyadicEndpoint, "endpoint " + e->str() + " is not dyadic");
      depth = std::max(depth, *k);
    }
  }
  require_length(depth);
  // Length-depth words w with I_w inside cl(V): the whole cells of each
  // closed span of cl(V). Point spans contain no cell.
  const Rational scale = Rational(1) / Rational::dyadic(depth);
  std::vector<Run> runs;
  const Region closed = closure(v.region());
  for (const auto& s : closed.spans()) {
    if (s.is_point()) continue;
    const auto lo = static_cast<std::uint64_t>((s.lo * scale).floor_int64());
    const auto hi = static_cast<std::uint64_t>((s.hi * scale).floor_int64());
    if (lo < hi) runs.emplace_back(lo, hi);
  }
  return from_runs(merge_runs(std::move(runs)), depth);
}

CylinderCheck check_irreducible_cantor(std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::InvalidInput, "depth must be at least 1");
  require_length(depth);
  CylinderCheck report;
  report.depth = depth;
  const Region full = Region::full(unit_interval());
  for (std::size_t len = 1; len <= depth; ++len) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx) {
      const Word w = Word::from_index(idx, len);
      // b(C \ [w]) as the union of the remaining cylinders' intervals.
      std::vector<Span> rest;
      const CantorClopen rest_words = clopen_compl(CantorClopen::from_words({w}));
      for (const auto& v : rest_words.words()) {
        auto [lo, hi] = value_interval(v);
        rest.push_back(Span::closed(std::move(lo), std::move(hi)));
      }
      const Region remaining = make_region(unit_interval(), rest);
      auto [lo, hi] = value_interval(w);
      const Region expected = difference(full, interior(make_region(unit_interval(), {Span::closed(lo, hi)})));
      ++report.checked;
      if (!(remaining == expected) || remaining == full) report.failures.push_back(w);
    }
  }
  report.passed = report.failures.empty();
  report.note =
      "every nonempty open subset of C contains a cylinder and removing more only shrinks the image, "
      "so checking cylinders decides irreducibility up to the checked depth";
  return report;
}

void LawTally::record(bool ok, std::uint64_t sample) {
  if (ok) {
    ++passed;
  } else {
    ++failed;
    failing_samples.push_back(sample);
  }
}

bool BridgeReport::passed() const {
  for (const LawTally* t : {&psi_phi_roundtrip, &phi_psi_roundtrip, &psi_join, &psi_meet, &psi_neg, &phi_join,
                            &phi_meet, &phi_neg}) {
    if (t->failed != 0) return false;
  }
  return true;
}

CantorClopen clopen_from_mask(std::uint64_t mask, std::size_t depth) {
  if (depth > 6) throw Error(ErrorCode::TooLarge, "mask enumeration supports depth <= 6");
  std::vector<Word> words;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
    if ((mask >> i) & 1U) words.push_back(Word::from_index(i, depth));
  }
  return CantorClopen::from_words(std::move(words));
}

namespace {

RopenElem cells_to_ropen(const std::vector<std::uint64_t>& cells, std::size_t depth) {
  const Rational unit = Rational::dyadic(static_cast<unsigned>(depth));
  std::vector<Span> raw;
  raw.reserve(cells.size());
  for (std::uint64_t i : cells) {
    const Rational lo = Rational(static_cast<long>(i)) * unit;
    raw.push_back(Span::closed(lo, lo + unit));
  }
  return regularize(make_region(unit_interval(), raw));
}

}  // namespace

RopenElem ropen_from_mask(std::uint64_t mask, std::size_t depth) {
  if (depth > 6) throw Error(ErrorCode::TooLarge, "mask enumeration supports depth <= 6");
  std::vector<std::uint64_t> cells;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
    if ((mask >> i) & 1U) cells.push_back(i);
  }
  return cells_to_ropen(cells, depth);
}

CantorClopen random_clopen(std::uint64_t seed, std::size_t depth) {
  require_length(depth);
  Rng rng(seed);
  std::vector<Word> words;
  if (rng.coin()) {
    // A few cylinders of mixed lengths.
    const std::uint64_t count = rng.below(6);
    for (std::uint64_t n = 0; n < count; ++n) {
      const std::size_t len = depth == 0 ? 0 : 1 + rng.below(depth);
      words.push_back(Word::from_index(rng.below(std::uint64_t{1} << len), len));
    }
  } else {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
      if (rng.coin()) words.push_back(Word::from_index(i, depth));
    }
  }
  return CantorClopen::from_words(std::move(words));
}

RopenElem random_dyadic_regular_open(std::uint64_t seed, std::size_t depth) {
  require_length(depth);
  Rng rng(seed);
  const std::uint64_t cells_total = std::uint64_t{1} << depth;
  std::vector<std::uint64_t> cells;
  if (rng.coin()) {
    const std::uint64_t count = rng.below(6);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t a = rng.below(cells_total);
      std::uint64_t b = rng.below(cells_total);
      if (b < a) std::swap(a, b);
      for (std::uint64_t i = a; i <= b; ++i) cells.push_back(i);
    }
  } else {
    for (std::uint64_t i = 0; i < cells_total; ++i) {
      if (rng.coin()) cells.push_back(i);
    }
  }
  return cells_to_ropen(cells, depth);
}

BridgeReport verify_bridge(std::size_t depth, std::size_t samples, std::uint64_t seed) {
  if (depth == 0) throw Error(ErrorCode::InvalidInput, "depth must be at least 1");
  BridgeReport r;
  r.depth = depth;
  r.samples = samples;
  r.seed = seed;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(sample_seed(seed, i));
    const CantorClopen k1 = random_clopen(rng.next(), depth);
    const CantorClopen k2 = random_clopen(rng.next(), depth);
    const RopenElem v1 = random_dyadic_regular_open(rng.next(), depth);
    const RopenElem v2 = random_dyadic_regular_open(rng.next(), depth);

    const RopenElem pk1 = psi_c(k1);
    const RopenElem pk2 = psi_c(k2);
    const CantorClopen fv1 = phi_c(v1);
    const CantorClopen fv2 = phi_c(v2);

    r.psi_phi_roundtrip.record(psi_c(fv1) == v1, i);
    r.phi_psi_roundtrip.record(phi_c(pk1) == k1, i);
    r.psi_join.record(psi_c(clopen_union(k1, k2)) == ropen_join(pk1, pk2), i);
    r.psi_meet.record(psi_c(clopen_inter(k1, k2)) == ropen_meet(pk1, pk2), i);
    r.psi_neg.record(psi_c(clopen_compl(k1)) == ropen_neg(pk1), i);
    r.phi_join.record(phi_c(ropen_join(v1, v2)) == clopen_union(fv1, fv2), i);
    r.phi_meet.record(phi_c(ropen_meet(v1, v2)) == clopen_inter(fv1, fv2), i);
    r.phi_neg.record(phi_c(ropen_neg(v1)) == clopen_compl(fv1), i);
  }
  return r;
}

}  // namespace ropen::cantor
