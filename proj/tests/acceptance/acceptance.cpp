//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance report: one PASS/FAIL line per criterion. Exits 0 once every
// criterion has been evaluated (2 on a harness error); --strict also
// exits 1 when any criterion fails.
//

#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brs/augment/augment.h"
#include "brs/dataset/corpus.h"
#include "brs/dataset/generate.h"
#include "brs/encode/binary.h"
#include "brs/encode/encode.h"
#include "brs/encode/vocab.h"
#include "brs/evalkit/evaluate.h"
#include "brs/molgraph/canonical.h"
#include "brs/rxn/apply.h"
#include "brs/rxn/registry.h"
#include "test_support.h"

namespace brs {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

bool contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> apply_one(const SmartsReaction &r, const Molecule &m) {
  return brs::apply(r, std::span<const Molecule>(&m, 1), MatchMode::kIntra);
}

// ---------------------------------------------------------------------------

Verdict oracle_equivalence() {
  const auto t0 = Clock::now();
  const Registry reg = Registry::builtin();
  std::ifstream in(test::data_path("rxn_oracle.jsonl"));
  if (!in) throw std::runtime_error("missing oracle fixture");
  std::size_t rows = 0, mismatches = 0;
  std::set<int> templates;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    const int id = j.at("template").get<int>();
    const MatchMode mode = j.at("mode").get<std::string>() == "inter" ? MatchMode::kInter : MatchMode::kIntra;
    std::vector<Molecule> mols;
    for (const auto &s : j.at("reactants")) mols.push_back(parse_smiles(s.get<std::string>()));
    std::vector<std::string> expected;
    for (const auto &s : j.at("products")) expected.push_back(canonical_smiles(s.get<std::string>()));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const std::vector<std::string> got = brs::apply(reg.at(id), mols, mode);
    ++rows;
    templates.insert(id);
    if (got != expected) ++mismatches;
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = rows >= 200 && templates.size() == 20 && mismatches == 0 && secs < 30;
  v.detail = std::to_string(rows) + " pairs, " + std::to_string(templates.size()) + " templates, " +
             std::to_string(mismatches) + " mismatches, " + fmt_seconds(secs);
  return v;
}

Verdict registry_sanity() {
  std::size_t parsed = 0;
  for (std::string_view s : brs_template_strings()) {
    try {
      parse_reaction(s);
      ++parsed;
    } catch (const std::exception &) {
    }
  }
  const Registry builtin = Registry::builtin();
  const Registry file = Registry::load(test::source_path("data/brs_templates.txt"));
  bool same = builtin.size() == file.size();
  for (int id = 1; same && id <= builtin.size(); ++id) same = builtin.text(id) == file.text(id);
  bool paired = true;
  for (int id = 1; id <= kNumBrsTemplates; ++id) {
    const int inv = inverse_of(id);
    paired = paired && inv >= 1 && inv <= kNumBrsTemplates && inverse_of(inv) == id && direction_of(inv) != direction_of(id) &&
             std::abs(inv - id) == 10;
  }
  Verdict v;
  v.pass = parsed == 20 && same && paired;
  v.detail = std::to_string(parsed) + "/20 parse, data file " + (same ? "matches" : "differs") +
             ", inverse pairing " + (paired ? "total" : "broken");
  return v;
}

// Widens element symbols on the reactant side to atomic numbers; used only
// to explain round-trip misses.
SmartsReaction widen_symbols(SmartsReaction r) {
  for (AtomExpr &a : r.lhs.atoms)
    for (Primitive &p : a.or_terms)
      if (p.kind == PrimitiveKind::kAliphatic || p.kind == PrimitiveKind::kAromatic) p.kind = PrimitiveKind::kAtomicNumber;
  return parse_reaction(to_string(r));
}

Verdict round_trip() {
  const Registry reg = Registry::builtin();
  const std::vector<Molecule> &pool = test::fixture_pool();
  Rng rng(20260101);
  constexpr std::size_t kTarget = 1000;
  std::size_t done = 0, recovered = 0, explained = 0;
  std::map<int, std::pair<std::size_t, std::size_t>> per;  // id -> (runs, misses)
  while (done < kTarget) {
    const int id = 2 + static_cast<int>(random_index(rng, 9));
    const Molecule &m = pool[random_index(rng, pool.size())];
    const std::string original = write_canonical(m);
    const std::vector<Product> products = apply_reaction(reg.at(id), std::span<const Molecule>(&m, 1));
    std::vector<const Product *> changed;
    for (const Product &p : products)
      if (p.smiles != original) changed.push_back(&p);
    if (changed.empty()) continue;
    const Product &p = *changed[random_index(rng, changed.size())];
    ++done;
    ++per[id].first;
    if (contains(apply_one(reg.at(inverse_of(id)), p.molecule), original)) {
      ++recovered;
      continue;
    }
    ++per[id].second;
    if (contains(apply_one(widen_symbols(reg.at(inverse_of(id))), p.molecule), original)) ++explained;
  }

  // 1/11: two molecules joined, then split with the discarded fragment kept.
  std::size_t pair_runs = 0, pair_ok = 0;
  while (pair_runs < 500) {
    std::vector<Molecule> ab = {pool[random_index(rng, pool.size())], pool[random_index(rng, pool.size())]};
    const std::vector<Product> joined = apply_reaction(reg.at(1), ab, {MatchMode::kInter, false});
    if (joined.empty()) continue;
    const Product &p = joined[random_index(rng, joined.size())];
    ++pair_runs;
    const std::string a = write_canonical(ab[0]), b = write_canonical(ab[1]);
    const std::vector<Product> split =
        apply_reaction(reg.at(11), std::span<const Molecule>(&p.molecule, 1), {MatchMode::kIntra, true});
    bool ok = false;
    for (const Product &q : split)
      ok = ok || (q.smiles == a && contains(q.discarded, b)) || (q.smiles == b && contains(q.discarded, a));
    pair_ok += ok;
  }

  Verdict v;
  v.pass = recovered == done && pair_ok == pair_runs;
  std::ostringstream os;
  os << "2-10: " << recovered << "/" << done << " recovered";
  if (recovered != done) {
    os << " (misses by template:";
    for (const auto &[id, rm] : per)
      if (rm.second) os << ' ' << id << '=' << rm.second << '/' << rm.first;
    os << "; " << explained << " of " << (done - recovered)
       << " recovered once the inverse's element symbols match aromatic atoms too)";
  }
  os << "; 1/11: " << pair_ok << "/" << pair_runs << " recovered";
  v.detail = os.str();
  return v;
}

Verdict augmentation_semantics() {
  const Registry reg = Registry::builtin();
  struct Class {
    const char *name;
    std::vector<OpKind> kinds;
    int relation;  // 0 equal, -1 subset, +1 superset
  };
  const std::vector<Class> classes = {
      {"permutation", {OpKind::kPermuteWithin, OpKind::kPermuteBetween}, 0},
      {"specialization", {OpKind::kSpecialize}, -1},
      {"combination", {OpKind::kCombine}, -1},
      {"generalization", {OpKind::kGeneralize}, +1},
  };
  std::ostringstream os;
  bool all = true;
  std::uint64_t seed = 11;
  for (const Class &c : classes) {
    const std::vector<Molecule> mols = test::sample_pool(100, seed++);
    std::size_t checks = 0, bad = 0, variants = 0;
    for (int id = 1; id <= reg.size(); ++id) {
      EnumerateOptions eo;
      eo.kinds = c.kinds;
      eo.max_count = 3;
      eo.max_chain = 1;
      eo.seed = seed * 100 + id;
      eo.base_id = id;
      for (const AugmentedTemplate &var : enumerate_variants(reg.at(id), eo)) {
        ++variants;
        for (const Molecule &m : mols) {
          const std::vector<std::string> base = apply_one(reg.at(id), m);
          const std::vector<std::string> got = apply_one(var.result, m);
          bool ok = false;
          if (c.relation == 0) ok = got == base;
          else if (c.relation < 0) ok = std::includes(base.begin(), base.end(), got.begin(), got.end());
          else ok = std::includes(got.begin(), got.end(), base.begin(), base.end());
          ++checks;
          bad += !ok;
        }
      }
    }
    all = all && bad == 0 && variants > 0;
    os << c.name << " " << (checks - bad) << "/" << checks << " (" << variants << " variants); ";
  }
  Verdict v;
  v.pass = all;
  v.detail = os.str();
  v.detail.resize(v.detail.size() - 2);
  return v;
}

Verdict canonicalization() {
  const auto t0 = Clock::now();
  std::ifstream in(test::data_path("canon_fixture.tsv"));
  if (!in) throw std::runtime_error("missing canonical fixture");
  std::size_t mols = 0, bad_fixed = 0, bad_relabel = 0, bad_random = 0, bad_forms = 0;
  Rng rng(4242);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> forms;
    for (std::string f; std::getline(fields, f, '\t');)
      if (!f.empty()) forms.push_back(f);
    if (forms.empty()) continue;
    ++mols;
    const Molecule m = parse_smiles(forms[0]);
    const std::string c = write_canonical(m);
    if (canonical_smiles(c) != c) ++bad_fixed;
    for (std::size_t i = 1; i < forms.size(); ++i)
      if (canonical_smiles(forms[i]) != c) {
        ++bad_forms;
        break;
      }
    if (write_canonical(permute_atoms(m, test::random_permutation(m.num_atoms(), rng))) != c) ++bad_relabel;
    for (int k = 0; k < 4; ++k)
      if (canonical_smiles(randomized_smiles(m, rng())) != c) {
        ++bad_random;
        break;
      }
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = mols >= 10000 && bad_fixed == 0 && bad_relabel == 0 && bad_random == 0 && bad_forms == 0 && secs < 60;
  v.detail = std::to_string(mols) + " molecules; misses: fixed-point " + std::to_string(bad_fixed) +
             ", relabeling " + std::to_string(bad_relabel) + ", randomized x4 " + std::to_string(bad_random) +
             ", fixture forms " + std::to_string(bad_forms) + "; " + fmt_seconds(secs);
  return v;
}

std::string serialize(const Corpus &c) {
  std::string out;
  for (const auto &split : c.splits)
    for (const DatasetRecord &r : split) out += to_json_line(r) + '\n';
  return out + c.stats.to_json();
}

// Shared with the tokenizer criterion.
struct DeskCorpus {
  Corpus corpus;
  std::vector<DatasetRecord> train_aug;
};

Verdict dataset_pipeline(DeskCorpus &desk) {
  const auto t0 = Clock::now();
  GenerateConfig cfg = load_generate_config(test::data_path("desk.json"));
  cfg.workers = 1;
  const Corpus a = generate(cfg);
  const Corpus b = generate(cfg);
  cfg.workers = 4;
  const Corpus c = generate(cfg);
  const std::string sa = serialize(a);
  const bool same_runs = sa == serialize(b);
  const bool same_workers = sa == serialize(c);

  const std::filesystem::path dir = test::temp_dir("acceptance_desk");
  write_corpus(a, (dir / "w1").string());
  write_corpus(c, (dir / "w4").string());
  bool same_files = true;
  for (const char *f : {"train.jsonl", "valid.jsonl", "test.jsonl", "stats.json"})
    same_files = same_files && test::read_file((dir / "w1" / f).string()) == test::read_file((dir / "w4" / f).string());

  std::map<std::string, std::set<int>> where;
  for (int s = 0; s < 3; ++s)
    for (const DatasetRecord &r : a.splits[s]) where[group_key(r)].insert(s);
  std::size_t leaks = 0;
  for (const auto &[key, splits] : where) leaks += splits.size() > 1;

  const bool sizes = a.splits[0].size() == 2000 && a.splits[1].size() == 200 && a.splits[2].size() == 200;
  AugmentCorpusOptions ao;
  ao.seed = 3;
  AugmentCorpusStats st;
  std::vector<DatasetRecord> doubled = augment_corpus(a.splits[0], Registry::builtin(), ao, &st);
  const bool twice = doubled.size() == 2 * a.splits[0].size();
  const double secs = seconds_since(t0);

  Verdict v;
  v.pass = sizes && same_runs && same_workers && same_files && leaks == 0 && twice && secs < 600;
  std::ostringstream os;
  os << a.splits[0].size() << "/" << a.splits[1].size() << "/" << a.splits[2].size() << "; repeat run "
     << (same_runs ? "identical" : "differs") << "; workers 1 vs 4 " << (same_workers && same_files ? "identical" : "differ")
     << "; leaked groups " << leaks << "; aug-corpus " << a.splits[0].size() << " -> " << doubled.size() << " ("
     << st.augmented << " augmented, " << st.duplicated << " duplicated); " << fmt_seconds(secs);
  v.detail = os.str();
  desk.corpus = a;
  desk.train_aug = std::move(doubled);
  return v;
}

Verdict tokenizer(const DeskCorpus &desk) {
  std::vector<DatasetRecord> all = desk.train_aug;
  for (int s = 1; s < 3; ++s) all.insert(all.end(), desk.corpus.splits[s].begin(), desk.corpus.splits[s].end());
  const Vocab v1 = build_vocab(all);
  const Vocab v2 = build_vocab(all);
  const std::filesystem::path dir = test::temp_dir("acceptance_vocab");
  v1.save((dir / "a.txt").string());
  v2.save((dir / "b.txt").string());
  const bool vocab_same = v1 == v2 && test::read_file((dir / "a.txt").string()) == test::read_file((dir / "b.txt").string()) &&
                          Vocab::load((dir / "a.txt").string()) == v1;

  std::size_t strings = 0, bad_roundtrip = 0, bad_align = 0;
  auto aligned = [](const TokenSequence &t) {
    if (t.ids.size() != t.type_ids.size()) return false;
    for (std::size_t i = 0; i < t.ids.size(); ++i) {
      const bool special = t.ids[i] == kSepId || t.ids[i] == kBosId || t.ids[i] == kEosId;
      if (special != (t.type_ids[i] == kTypeSpecial)) return false;
      if ((t.ids[i] == kPadId) != (t.type_ids[i] == kTypePad)) return false;
    }
    return true;
  };
  for (const DatasetRecord &r : all) {
    std::string joined;
    for (std::size_t i = 0; i < r.reactants.size(); ++i) joined += (i ? "|" : "") + r.reactants[i];
    const TokenSequence tf = encode_input(r.reactants, std::nullopt, v1, InputMode::kTemplateFree);
    const TokenSequence tb = encode_input(r.reactants, r.template_smarts, v1, InputMode::kTemplateBased);
    strings += 2;
    bad_roundtrip += decode(tf, v1, "|") != joined;
    bad_roundtrip += decode(tb, v1, "|") != joined + "|" + r.template_smarts;
    bad_align += !aligned(tf) + !aligned(tb);
    for (const std::string &p : r.products) {
      const TokenSequence t = encode_target(p, v1);
      ++strings;
      bad_roundtrip += decode(t, v1) != p;
      bad_align += !aligned(t);
    }
  }
  const EncodedSet e = encode_records(desk.corpus.splits[2], v1, InputMode::kTemplateBased);
  write_encoded((dir / "test").string(), e);
  const EncodedSet back = read_encoded((dir / "test").string());
  const bool binary_ok = back.src == e.src && back.tgt == e.tgt && back.record == e.record;

  Verdict v;
  v.pass = vocab_same && bad_roundtrip == 0 && bad_align == 0 && binary_ok;
  v.detail = "vocab size " + std::to_string(v1.size()) + (vocab_same ? " (deterministic)" : " (differs)") + "; " +
             std::to_string(strings - bad_roundtrip) + "/" + std::to_string(strings) + " strings round-trip; " +
             std::to_string(bad_align) + " misaligned; binary streams " + (binary_ok ? "round-trip" : "differ");
  return v;
}

Verdict evaluation() {
  // Reference sets hold 1-3 fixture molecules; each prediction hits the
  // first, hits the last, or names an unrelated molecule.
  const std::vector<Molecule> mols = test::sample_pool(600, 77);
  std::vector<DatasetRecord> refs;
  std::vector<std::string> canonical_pred, random_pred;
  std::vector<bool> hits;
  Rng rng(91);
  for (std::size_t i = 0; i + 3 < mols.size(); i += 4) {
    DatasetRecord r;
    r.template_id = 1 + static_cast<int>(random_index(rng, 20));
    r.reactants = {"C"};
    const std::size_t k = 1 + random_index(rng, 3);
    for (std::size_t j = 0; j < k; ++j) r.products.push_back(write_canonical(mols[i + j]));
    const int kind = static_cast<int>(random_index(rng, 3));
    const Molecule &pick = kind == 0 ? mols[i] : kind == 1 ? mols[i + k - 1] : mols[i + 3];
    canonical_pred.push_back(write_canonical(pick));
    random_pred.push_back(randomized_smiles(pick, rng()));
    hits.push_back(contains(r.products, canonical_pred.back()));
    refs.push_back(std::move(r));
  }
  // unparseable prediction: a miss
  canonical_pred.back() = random_pred.back() = "C1CC(";
  hits.back() = false;

  std::size_t expected_correct = 0;
  std::map<int, std::pair<std::size_t, std::size_t>> per;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    expected_correct += hits[i];
    per[refs[i].template_id].first += 1;
    per[refs[i].template_id].second += hits[i];
  }
  const EvalReport a = evaluate(canonical_pred, refs);
  const EvalReport b = evaluate(random_pred, refs);

  bool per_ok = a.per_template.size() == per.size();
  for (const auto &[id, tc] : per) {
    const auto it = a.per_template.find(id);
    per_ok = per_ok && it != a.per_template.end() && it->second.total == tc.first && it->second.correct == tc.second &&
             std::abs(it->second.accuracy() - static_cast<double>(tc.second) / static_cast<double>(tc.first)) < 1e-12;
  }
  const double expected = static_cast<double>(expected_correct) / static_cast<double>(refs.size());
  const bool invariant = a.overall.correct == b.overall.correct && a.overall.total == b.overall.total &&
                         a.to_json() == b.to_json();
  const bool membership = exact_match("C=CO", {"CC=O", "C=CO"}) && exact_match("OCC", {"CCO"}) &&
                          !exact_match("not-a-smiles", {"CCO"}) && !exact_match("CCC", {"CCO", "CC=O"});
  Verdict v;
  v.pass = a.overall.correct == expected_correct && std::abs(a.overall.accuracy() - expected) < 1e-12 && per_ok &&
           invariant && membership;
  std::ostringstream os;
  os.precision(6);
  os << refs.size() << " cases, accuracy " << a.overall.accuracy() << " (expected " << expected << ")"
     << "; randomized predictions " << (invariant ? "give the same report" : "differ") << "; per-template "
     << (per_ok ? "exact" : "wrong") << "; membership " << (membership ? "ok" : "wrong");
  v.detail = os.str();
  return v;
}

}  // namespace
}  // namespace brs

int main(int argc, char **argv) {
  bool strict = false;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;
    else if (std::strcmp(argv[i], "--report") == 0 && i + 1 < argc) report_path = argv[++i];
    else {
      std::cerr << "usage: brs_acceptance [--strict] [--report FILE]\n";
      return 2;
    }
  }
  using brs::Verdict;
  brs::DeskCorpus desk;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"oracle-equivalence", brs::oracle_equivalence},
      {"registry-sanity", brs::registry_sanity},
      {"round-trip-symmetry", brs::round_trip},
      {"augmentation-semantics", brs::augmentation_semantics},
      {"canonicalization", brs::canonicalization},
      {"dataset-pipeline", [&] { return brs::dataset_pipeline(desk); }},
      {"tokenizer", [&] { return brs::tokenizer(desk); }},
      {"evaluation", brs::evaluation},
  };
  std::ostringstream report;
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception &e) {
      std::cerr << "harness error in " << name << ": " << e.what() << '\n';
      return 2;
    }
    failed += !v.pass;
    const std::string out = std::string(v.pass ? "PASS " : "FAIL ") + name + ": " + v.detail;
    std::cout << out << std::endl;
    report << out << '\n';
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << report.str();
  }
  return strict && failed > 0 ? 1 : 0;
}
