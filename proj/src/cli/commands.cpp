//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brs/augment/augment.h"
#include "brs/dataset/corpus.h"
#include "brs/dataset/generate.h"
#include "brs/dataset/scaffold.h"
#include "brs/dataset/source.h"
#include "brs/encode/binary.h"
#include "brs/encode/vocab.h"
#include "brs/evalkit/evaluate.h"
#include "brs/molgraph/canonical.h"
#include "brs/molgraph/smiles.h"
#include "brs/rxn/apply.h"
#include "brs/rxn/registry.h"
#include "brs/smarts/match.h"

namespace brs {
namespace {

using Json = nlohmann::ordered_json;

// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(strip_whitespace(item));
  return out;
}

std::vector<Molecule> parse_all(const std::vector<std::string> &smiles) {
  std::vector<Molecule> out;
  for (const std::string &s : smiles) out.push_back(parse_smiles(s));
  return out;
}

Registry open_registry(const std::string &path) {
  return path.empty() ? Registry::builtin() : Registry::load(path);
}

// A registry id or a literal reaction SMARTS; *id is 0 for the latter.
SmartsReaction resolve_template(const std::string &spec, const std::string &registry_path, int *id) {
  const bool numeric = !spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) {
    *id = std::stoi(spec);
    return open_registry(registry_path).at(*id);
  }
  *id = 0;
  return parse_reaction(spec);
}

MatchMode mode_of(bool inter) { return inter ? MatchMode::kInter : MatchMode::kIntra; }

struct Options {
  std::string smiles, smarts, tmpl, reactants, registry, ops = "spec,gen,perm,comb";
  std::string config, in, out, molecules, records, vocab, mode = "tb", pred, refs;
  bool intra = false, inter = false, keep_discarded = false, tsv = false, pretty = false;
  int max = 10, workers = 0, variants = 12, factor = 4, chain = 2;
  std::uint64_t seed = 0;
};

void print_pretty(const EvalReport &r, std::ostream &out) {
  auto row = [&](const std::string &label, const Score &s) {
    out << std::left << std::setw(10) << label << std::right << std::setw(8) << s.correct << std::setw(8) << s.total
        << std::setw(10) << std::fixed << std::setprecision(4) << s.accuracy() << '\n';
  };
  out << std::left << std::setw(10) << "template" << std::right << std::setw(8) << "correct" << std::setw(8)
      << "total" << std::setw(10) << "accuracy" << '\n';
  for (const auto &[id, s] : r.per_template) row(std::to_string(id), s);
  row("all", r.overall);
}

int cmd_canon(const Options &o, std::ostream &out) {
  out << Json{{"canonical", write_canonical(parse_smiles(o.smiles))}}.dump() << '\n';
  return kExitOk;
}

int cmd_match(const Options &o, std::ostream &out) {
  const PatternGraph p = parse_smarts(strip_whitespace(o.smarts));
  const std::vector<Molecule> mols = parse_all(split_list(o.smiles));
  const std::vector<Embedding> found = match(p, mols, mode_of(o.inter));
  Json list = Json::array();
  for (const Embedding &e : found) {
    Json one = Json::array();
    for (const AtomRef &a : e.assignment) one.push_back({a.mol, a.atom});
    list.push_back(std::move(one));
  }
  out << Json{{"count", found.size()}, {"embeddings", list}}.dump() << '\n';
  return kExitOk;
}

int cmd_apply(const Options &o, std::ostream &out) {
  int id = 0;
  const SmartsReaction r = resolve_template(o.tmpl, o.registry, &id);
  const std::vector<Molecule> mols = parse_all(split_list(o.reactants));
  const std::vector<Product> products = apply_reaction(r, mols, {mode_of(o.inter), o.keep_discarded});
  Json smiles = Json::array();
  for (const Product &p : products) smiles.push_back(p.smiles);
  Json j{{"products", smiles}};
  if (o.keep_discarded) {
    Json discarded = Json::object();
    for (const Product &p : products) discarded[p.smiles] = p.discarded;
    j["discarded"] = discarded;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_augment(const Options &o, std::ostream &out) {
  int id = 0;
  const SmartsReaction r = resolve_template(o.tmpl, o.registry, &id);
  EnumerateOptions eo;
  try {
    eo.kinds = parse_op_kinds(o.ops);
  } catch (const AugmentError &e) {
    throw UsageError(e.what());
  }
  eo.max_count = o.max;
  eo.seed = o.seed;
  eo.base_id = id;
  eo.max_chain = o.chain;
  for (const AugmentedTemplate &v : enumerate_variants(r, eo)) {
    if (o.tsv) out << v.base_id << '\t' << signature(v.ops) << '\t' << v.text << '\n';
    else out << Json{{"base_id", v.base_id}, {"ops", signature(v.ops)}, {"template", v.text}}.dump() << '\n';
  }
  return kExitOk;
}

int cmd_gen_dataset(const Options &o, std::ostream &out, std::ostream &err) {
  GenerateConfig cfg = load_generate_config(o.config);
  if (o.workers > 0) cfg.workers = o.workers;
  if (!o.out.empty()) cfg.out_dir = o.out;
  if (cfg.out_dir.empty()) throw UsageError("no output directory: set out_dir in the config or pass --out");
  const Corpus c = generate(cfg);
  write_corpus(c, cfg.out_dir);
  for (const auto &[name, ls] : c.stats.sources)
    if (ls.lines == 0) err << "warning: source " << name << " has no molecules\n";
  if (!c.stats.complete) err << "warning: molecule pool exhausted before the targets were met\n";
  out << Json{{"out_dir", cfg.out_dir},
              {"train", c.splits[0].size()},
              {"valid", c.splits[1].size()},
              {"test", c.splits[2].size()},
              {"complete", c.stats.complete}}
             .dump()
      << '\n';
  return kExitOk;
}

// Records go to --out when given, otherwise to stdout.
void emit_records(const std::vector<DatasetRecord> &records, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    for (const DatasetRecord &r : records) out << to_json_line(r) << '\n';
  } else {
    write_records(path, records);
  }
}

int cmd_aug_corpus(const Options &o, std::ostream &out, std::ostream &err) {
  const std::vector<DatasetRecord> train = read_records(o.in);
  AugmentCorpusOptions ao;
  ao.seed = o.seed;
  ao.variants_per_record = o.variants;
  ao.mode = mode_of(o.inter);
  AugmentCorpusStats st;
  const std::vector<DatasetRecord> doubled = augment_corpus(train, open_registry(o.registry), ao, &st);
  emit_records(doubled, o.out, out);
  const Json summary{{"input", st.input}, {"output", doubled.size()}, {"augmented", st.augmented},
                     {"duplicated", st.duplicated}};
  (o.out.empty() ? err : out) << summary.dump() << '\n';
  return kExitOk;
}

int cmd_aug_inputs(const Options &o, std::ostream &out, std::ostream &err) {
  const std::vector<DatasetRecord> records = read_records(o.in);
  const std::vector<DatasetRecord> expanded = augment_inputs(records, o.factor, o.seed);
  emit_records(expanded, o.out, out);
  const Json summary{{"input", records.size()}, {"output", expanded.size()}};
  (o.out.empty() ? err : out) << summary.dump() << '\n';
  return kExitOk;
}

int cmd_scaffold_allowlist(const Options &o, std::ostream &out, std::ostream &err) {
  MoleculeSource src;
  src.name = src.path = o.molecules;
  LoadStats ls;
  const std::vector<Molecule> mols = load_molecules(src, &ls);
  if (ls.lines == 0) err << "warning: " << o.molecules << " has no molecules\n";
  const ScaffoldSet s = build_scaffold_allowlist(mols);
  save_scaffold_allowlist(s, o.out);
  out << Json{{"molecules", ls.kept}, {"skipped", ls.lines - ls.kept}, {"signatures", s.size()}}.dump() << '\n';
  return kExitOk;
}

int cmd_build_vocab(const Options &o, std::ostream &out) {
  std::vector<DatasetRecord> all;
  for (const std::string &path : split_list(o.records))
    for (DatasetRecord &r : read_records(path)) all.push_back(std::move(r));
  const Vocab v = build_vocab(all);
  v.save(o.out);
  out << Json{{"size", v.size()}, {"records", all.size()}}.dump() << '\n';
  return kExitOk;
}

int cmd_tokenize(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.mode != "tb" && o.mode != "tf") throw UsageError("--mode must be tb or tf");
  const Vocab v = Vocab::load(o.vocab);
  EncodeStats st;
  const EncodedSet e = encode_records(read_records(o.records), v,
                                      o.mode == "tb" ? InputMode::kTemplateBased : InputMode::kTemplateFree, &st);
  write_encoded(o.out, e);
  if (st.unknown > 0) err << "warning: " << st.unknown << " characters mapped to <unk>\n";
  out << Json{{"records", st.records}, {"pairs", st.pairs}, {"unknown", st.unknown}}.dump() << '\n';
  return kExitOk;
}

int cmd_eval(const Options &o, std::ostream &out) {
  const EvalReport r = evaluate_files(o.pred, o.refs);
  if (o.pretty) print_pretty(r, out);
  else out << r.to_json() << '\n';
  return kExitOk;
}

void add_mode_flags(CLI::App *sub, Options &o) {
  CLI::Option *intra = sub->add_flag("--intra", o.intra, "All pattern components may bind one molecule (default)");
  CLI::Option *inter = sub->add_flag("--inter", o.inter, "Each pattern component binds its own molecule");
  intra->excludes(inter);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"BRSKit reaction-template engine and dataset toolchain", "brs"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  CLI::App *canon = app.add_subcommand("canon", "Canonical SMILES");
  canon->add_option("--smiles", o.smiles)->required();
  canon->callback([&] { action = [&] { return cmd_canon(o, out); }; });

  CLI::App *match_cmd = app.add_subcommand("match", "SMARTS embeddings");
  match_cmd->add_option("--smarts", o.smarts)->required();
  match_cmd->add_option("--smiles", o.smiles, "Comma-separated molecules")->required();
  add_mode_flags(match_cmd, o);
  match_cmd->callback([&] { action = [&] { return cmd_match(o, out); }; });

  CLI::App *apply_cmd = app.add_subcommand("apply", "Apply a template");
  apply_cmd->add_option("--template", o.tmpl, "Registry id or reaction SMARTS")->required();
  apply_cmd->add_option("--reactants", o.reactants, "Comma-separated molecules")->required();
  apply_cmd->add_option("--registry", o.registry, "Registry file (default: built-in)");
  apply_cmd->add_flag("--keep-discarded", o.keep_discarded, "Also report split-off fragments");
  add_mode_flags(apply_cmd, o);
  apply_cmd->callback([&] { action = [&] { return cmd_apply(o, out); }; });

  CLI::App *augment = app.add_subcommand("augment", "Template variants");
  augment->add_option("--template", o.tmpl, "Registry id or reaction SMARTS")->required();
  augment->add_option("--ops", o.ops, "Subset of spec,gen,perm,comb");
  augment->add_option("--max", o.max)->check(CLI::PositiveNumber);
  augment->add_option("--seed", o.seed);
  augment->add_option("--chain", o.chain, "Edits per variant")->check(CLI::Range(1, 8));
  augment->add_option("--registry", o.registry);
  augment->add_flag("--tsv", o.tsv, "base_id<TAB>ops<TAB>smarts lines");
  augment->callback([&] { action = [&] { return cmd_augment(o, out); }; });

  CLI::App *gen = app.add_subcommand("gen-dataset", "Generate train/valid/test records");
  gen->add_option("--config", o.config)->required()->check(CLI::ExistingFile);
  gen->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, "Output directory (overrides the config)");
  gen->callback([&] { action = [&] { return cmd_gen_dataset(o, out, err); }; });

  CLI::App *aug_corpus = app.add_subcommand("aug-corpus", "Double a training file with template variants");
  aug_corpus->add_option("--in", o.in)->required();
  aug_corpus->add_option("--seed", o.seed);
  aug_corpus->add_option("--out", o.out, "Output file (default: stdout)");
  aug_corpus->add_option("--variants", o.variants, "Variants tried per record")->check(CLI::PositiveNumber);
  aug_corpus->add_option("--registry", o.registry);
  add_mode_flags(aug_corpus, o);
  aug_corpus->callback([&] { action = [&] { return cmd_aug_corpus(o, out, err); }; });

  CLI::App *aug_inputs = app.add_subcommand("aug-inputs", "Randomized-SMILES copies of each record");
  aug_inputs->add_option("--in", o.in)->required();
  aug_inputs->add_option("--factor", o.factor)->check(CLI::PositiveNumber);
  aug_inputs->add_option("--seed", o.seed);
  aug_inputs->add_option("--out", o.out, "Output file (default: stdout)");
  aug_inputs->callback([&] { action = [&] { return cmd_aug_inputs(o, out, err); }; });

  CLI::App *scaffold = app.add_subcommand("scaffold-allowlist", "Ring-system signatures of a molecule file");
  scaffold->add_option("--molecules", o.molecules)->required();
  scaffold->add_option("--out", o.out)->required();
  scaffold->callback([&] { action = [&] { return cmd_scaffold_allowlist(o, out, err); }; });

  CLI::App *tokenize = app.add_subcommand("tokenize", "Encode records to binary streams");
  tokenize->add_option("--records", o.records)->required();
  tokenize->add_option("--vocab", o.vocab)->required();
  tokenize->add_option("--mode", o.mode, "tb (template-based) or tf (template-free)");
  tokenize->add_option("--out", o.out, "Output prefix")->required();
  tokenize->callback([&] { action = [&] { return cmd_tokenize(o, out, err); }; });

  CLI::App *vocab = app.add_subcommand("build-vocab", "Character vocabulary of record files");
  vocab->add_option("--records", o.records, "Comma-separated record files")->required();
  vocab->add_option("--out", o.out)->required();
  vocab->callback([&] { action = [&] { return cmd_build_vocab(o, out); }; });

  CLI::App *eval = app.add_subcommand("eval", "Exact-match accuracy");
  eval->add_option("--pred", o.pred)->required();
  eval->add_option("--refs", o.refs)->required();
  eval->add_flag("--pretty", o.pretty, "Table instead of JSON");
  eval->callback([&] { action = [&] { return cmd_eval(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace brs
