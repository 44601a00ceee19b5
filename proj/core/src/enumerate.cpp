#include "lcmlat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <unordered_set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

// Children of every parent, deduplicated. Workers pull parents from a shared
// counter and keep private sets; the union is independent of scheduling.
FormSet next_level(const std::vector<Structure>& parents, int threads) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(parents.size())));
  std::vector<FormSet> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    for (std::size_t i = next++; i < parents.size(); i = next++) {
      for (const Structure& child : maximal_extensions(parents[i])) {
        partial[w].insert(canonical_form(child));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  FormSet merged = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) merged.insert(partial[w].begin(), partial[w].end());
  return merged;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("LCMLAT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<ElementSet> admissible_down_sets(const Structure& s) {
  const int n = s.size();
  std::vector<ElementSet> out;
  const ElementSet::Word limit = ElementSet::Word{1} << n;
  for (ElementSet::Word bits = 1; bits < limit; ++bits) {
    const ElementSet down(bits);
    bool ok = true;
    for (int x : down) {
      if (!s.down_set(x).is_subset_of(down)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int y = 0; y < n && ok; ++y) {
      const ElementSet part = down & s.down_set(y);
      ok = !part.empty() && part.is_subset_of(s.down_set(part.highest()));
    }
    if (ok) out.push_back(down);
  }
  return out;
}

std::vector<Structure> maximal_extensions(const Structure& s) {
  const int n = s.size();
  if (n >= kMaxElements) throw PreconditionError("cannot extend a 64-element structure");
  std::vector<ElementSet> base(n);
  for (int x = 0; x < n; ++x) base[x] = s.down_set(x);
  std::vector<Structure> out;
  for (ElementSet down : admissible_down_sets(s)) {
    std::vector<ElementSet> child = base;
    child.push_back(down | ElementSet::single(n));
    out.push_back(Structure::from_down_sets(std::move(child)));
  }
  return out;
}

std::vector<CanonicalForm> enumerate_canonical_forms(int n, const EnumerateOptions& options) {
  if (n < 1) throw PreconditionError("enumeration size must be at least 1");
  if (n > kMaxElements) throw PreconditionError("enumeration size exceeds 64");
  if (n > kEnumerationSoftCap) {
    std::clog << "warning: enumerating meet semilattices with " << n
              << " elements; sizes above " << kEnumerationSoftCap
              << " can take a very long time\n";
  }
  const int threads = options.threads > 0 ? options.threads : default_thread_count();

  std::vector<CanonicalForm> forms{canonical_form(Structure::from_covers(1, {}))};
  for (int size = 2; size <= n; ++size) {
    std::vector<Structure> parents;
    parents.reserve(forms.size());
    for (const auto& f : forms) parents.push_back(f.to_structure());
    FormSet level = next_level(parents, threads);
    forms.assign(level.begin(), level.end());
    std::sort(forms.begin(), forms.end());
  }
  return forms;
}

std::vector<Structure> enumerate_meet_semilattices(int n, const EnumerateOptions& options) {
  std::vector<Structure> out;
  for (const auto& f : enumerate_canonical_forms(n, options)) out.push_back(f.to_structure());
  return out;
}

CensusRecord census(const Structure& s) {
  CensusRecord record;
  record.canonical_form = canonical_form(s);
  record.n = s.size();
  const Structure rep = record.canonical_form.to_structure();
  for (int e = 0; e < rep.size(); ++e) {
    const ElementSet covers = rep.lower_covers(e);
    if (covers.size() < 3) continue;
    if (width(rep, meet_closure(rep, covers) - covers) >= 3) {
      record.special = true;
      record.witness_element = e;
      break;
    }
  }
  return record;
}

std::vector<CensusRecord> filter_special(std::span<const Structure> structures) {
  std::vector<CensusRecord> out;
  for (const Structure& s : structures) {
    CensusRecord r = census(s);
    if (r.special) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return a.canonical_form < b.canonical_form;
  });
  return out;
}

}  // namespace lcmlat
