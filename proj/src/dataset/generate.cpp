//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/generate.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "brs/molgraph/canonical.h"
#include "brs/molgraph/smiles.h"
#include "brs/molgraph/element.h"
#include "brs/rxn/apply.h"
#include "brs/util/random.h"

namespace brs {
namespace {

constexpr std::size_t kBatch = 256;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct ItemResult {
  int template_id = 0;
  bool ok = false;
  DatasetRecord record;
  std::size_t noop = 0, forbidden = 0, scaffold = 0, apply_errors = 0, truncated = 0;
};

class Generator {
 public:
  Generator(const GenerateConfig &cfg, const Registry &registry, const std::vector<Molecule> &pool)
      : cfg_(cfg), registry_(registry), pool_(pinned(pool)), forbidden_(parse_forbidden(cfg.forbidden)) {
    templates_ = cfg.templates;
    if (templates_.empty())
      for (int id = 1; id <= registry.size(); ++id) templates_.push_back(id);
    for (int id : templates_)
      if (id < 1 || id > registry.size()) throw DataError("template id " + std::to_string(id) + " not in registry");
    if (!cfg.allowlist_path.empty()) allowlist_ = load_scaffold_allowlist(cfg.allowlist_path);
  }

  Corpus run() {
    Corpus c;
    GenerateStats &st = c.stats;
    st.pool_size = pool_.size();
    for (int id : templates_) st.per_template[id];
    const std::size_t total = cfg_.counts[0] + cfg_.counts[1] + cfg_.counts[2];
    const std::size_t max_items = cfg_.max_items > 0 ? cfg_.max_items : 200 * std::max<std::size_t>(total, 1);
    std::unordered_set<std::string> seen;
    auto full = [&] {
      for (int s = 0; s < 3; ++s)
        if (c.splits[s].size() < cfg_.counts[s]) return false;
      return true;
    };
    std::size_t k = 0;
    while (!pool_.empty() && !full() && k < max_items) {
      const std::size_t n = std::min(kBatch, max_items - k);
      std::vector<ItemResult> batch = run_batch(k, n);
      for (ItemResult &item : batch) {
        if (full()) break;
        merge(item, c, seen, total);
      }
      k += n;
    }
    st.complete = full();
    return c;
  }

 private:
  void merge(ItemResult &item, Corpus &c, std::unordered_set<std::string> &seen, std::size_t total) {
    GenerateStats &st = c.stats;
    TemplateStats &ts = st.per_template[item.template_id];
    ++st.items;
    ++ts.items;
    st.rejected_noop += item.noop;
    st.rejected_forbidden += item.forbidden;
    st.rejected_scaffold += item.scaffold;
    st.apply_errors += item.apply_errors;
    if (!item.ok) {
      ++ts.no_match;
      return;
    }
    const std::string key = group_key(item.record);
    if (seen.count(key)) {
      ++st.duplicate_groups;
      return;
    }
    if (cfg_.per_template_cap > 0 && ts.records >= static_cast<std::size_t>(cfg_.per_template_cap)) {
      ++st.capped_template;
      return;
    }
    const std::uint64_t h = fnv1a(key) % total;
    int split = h < cfg_.counts[0] ? 0 : h < cfg_.counts[0] + cfg_.counts[1] ? 1 : 2;
    if (c.splits[split].size() >= cfg_.counts[split])
      for (split = 0; split < 3 && c.splits[split].size() >= cfg_.counts[split]; ++split) { }
    seen.insert(key);
    st.truncated_products += item.truncated;
    ++ts.records;
    ts.products += item.record.products.size();
    item.record.split = kSplitNames[split];
    c.splits[split].push_back(std::move(item.record));
  }

  std::vector<ItemResult> run_batch(std::size_t first, std::size_t n) {
    std::vector<ItemResult> out(n);
    const int workers = std::max(1, std::min<int>(cfg_.workers, static_cast<int>(n)));
    if (workers == 1) {
      for (std::size_t i = 0; i < n; ++i) out[i] = process(first + i);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < n; i = next++) out[i] = process(first + i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (std::thread &t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
  }

  ItemResult process(std::size_t k) const {
    ItemResult item;
    const int id = templates_[k % templates_.size()];
    item.template_id = id;
    const SmartsReaction &r = registry_.at(id);
    Rng rng(derive_seed(cfg_.seed, {static_cast<std::uint64_t>(id), k}));
    const int slots = cfg_.mode == MatchMode::kInter ? r.lhs.num_components() : 1;
    for (int t = 0; t < cfg_.tries_per_item; ++t) {
      std::vector<Molecule> mols;
      for (int s = 0; s < slots; ++s) mols.push_back(pool_[random_index(rng, pool_.size())]);
      std::vector<Product> products;
      try {
        products = apply_reaction(r, mols, {cfg_.mode, false});
      } catch (const std::exception &) {
        ++item.apply_errors;
        continue;
      }
      if (products.empty()) continue;
      std::vector<std::string> reactants;
      for (const Molecule &m : mols) reactants.push_back(write_canonical(m));
      std::vector<std::string> kept;
      for (const Product &p : products) {
        if (std::find(reactants.begin(), reactants.end(), p.smiles) != reactants.end()) {
          ++item.noop;
          continue;
        }
        switch (check_product(p.molecule, forbidden_, allowlist_ ? &*allowlist_ : nullptr)) {
          case FilterVerdict::kForbidden: ++item.forbidden; break;
          case FilterVerdict::kScaffold: ++item.scaffold; break;
          case FilterVerdict::kPass: kept.push_back(p.smiles); break;
        }
      }
      if (kept.empty()) continue;
      if (cfg_.product_cap > 0 && kept.size() > static_cast<std::size_t>(cfg_.product_cap)) {
        seeded_shuffle(kept, rng);
        kept.resize(cfg_.product_cap);
        std::sort(kept.begin(), kept.end());
        item.truncated = 1;
      }
      item.ok = true;
      item.record.reactants = std::move(reactants);
      item.record.template_id = id;
      item.record.template_smarts = registry_.text(id);
      item.record.products = std::move(kept);
      return item;
    }
    return item;
  }

  const GenerateConfig &cfg_;
  const Registry &registry_;
  // Re-read from canonical SMILES: products of an aromatic reactant can
  // depend on its Kekule form, which follows input atom order. Records
  // must be reproducible from their reactant strings.
  static std::vector<Molecule> pinned(const std::vector<Molecule> &pool) {
    std::vector<Molecule> out;
    out.reserve(pool.size());
    for (const Molecule &m : pool) out.push_back(parse_smiles(write_canonical(m)));
    return out;
  }

  const std::vector<Molecule> pool_;
  std::vector<PatternGraph> forbidden_;
  std::optional<ScaffoldSet> allowlist_;
  std::vector<int> templates_;
};

std::string resolve(const std::filesystem::path &base, const std::string &p) {
  if (p.empty()) return p;
  const std::filesystem::path path(p);
  return path.is_absolute() ? p : (base / path).lexically_normal().string();
}

std::vector<int> parse_elements(const nlohmann::json &j) {
  std::vector<int> out;
  for (const auto &e : j) {
    const int z = atomic_number(e.get<std::string>());
    if (z <= 0) throw DataError("unknown element '" + e.get<std::string>() + "' in config");
    out.push_back(z);
  }
  return out;
}

}  // namespace

GenerateConfig load_generate_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read config " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  static const std::set<std::string> known = {
      "sources", "registry", "templates", "counts", "seed", "forbidden", "forbidden_file", "allowlist",
      "product_cap", "per_template_cap", "mode", "tries_per_item", "max_items", "workers", "out_dir"};
  GenerateConfig cfg;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    for (const auto &[key, value] : j.items())
      if (!known.count(key)) throw DataError("unknown config key '" + key + "'");
    for (const auto &s : j.at("sources")) {
      MoleculeSource src;
      src.path = resolve(base, s.at("path").get<std::string>());
      src.name = s.value("name", src.path);
      if (s.contains("elements")) src.element_allowlist = parse_elements(s.at("elements"));
      cfg.sources.push_back(std::move(src));
    }
    cfg.registry_path = resolve(base, j.value("registry", std::string()));
    cfg.templates = j.value("templates", std::vector<int>{});
    if (j.contains("counts")) {
      const auto &c = j.at("counts");
      for (int s = 0; s < 3; ++s) cfg.counts[s] = c.value(kSplitNames[s], cfg.counts[s]);
    }
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("forbidden")) cfg.forbidden = j.at("forbidden").get<std::vector<std::string>>();
    if (j.contains("forbidden_file")) {
      for (std::string &s : load_forbidden_file(resolve(base, j.at("forbidden_file").get<std::string>())))
        cfg.forbidden.push_back(std::move(s));
    }
    cfg.allowlist_path = resolve(base, j.value("allowlist", std::string()));
    cfg.product_cap = j.value("product_cap", cfg.product_cap);
    cfg.per_template_cap = j.value("per_template_cap", cfg.per_template_cap);
    const std::string mode = j.value("mode", std::string("intra"));
    if (mode == "intra") cfg.mode = MatchMode::kIntra;
    else if (mode == "inter") cfg.mode = MatchMode::kInter;
    else throw DataError("mode must be intra or inter");
    cfg.tries_per_item = j.value("tries_per_item", cfg.tries_per_item);
    cfg.max_items = j.value("max_items", cfg.max_items);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.out_dir = resolve(base, j.value("out_dir", std::string()));
  } catch (const nlohmann::json::exception &e) {
    throw DataError("config " + path + ": " + e.what());
  }
  if (cfg.sources.empty()) throw DataError("config " + path + ": no sources");
  if (cfg.counts[0] + cfg.counts[1] + cfg.counts[2] == 0) throw DataError("config " + path + ": all counts are zero");
  if (cfg.tries_per_item < 1) throw DataError("config " + path + ": tries_per_item must be positive");
  return cfg;
}

Corpus generate(const GenerateConfig &cfg, const Registry &registry, const std::vector<Molecule> &pool) {
  if (cfg.counts[0] + cfg.counts[1] + cfg.counts[2] == 0) return {};
  return Generator(cfg, registry, pool).run();
}

Corpus generate(const GenerateConfig &cfg) {
  const Registry registry = cfg.registry_path.empty() ? Registry::builtin() : Registry::load(cfg.registry_path);
  std::vector<Molecule> pool;
  std::vector<std::pair<std::string, LoadStats>> loaded;
  for (const MoleculeSource &src : cfg.sources) {
    LoadStats ls;
    for (Molecule &m : load_molecules(src, &ls)) pool.push_back(std::move(m));
    loaded.emplace_back(src.name, ls);
  }
  Corpus c = generate(cfg, registry, pool);
  c.stats.sources = std::move(loaded);
  return c;
}

std::string GenerateStats::to_json() const {
  nlohmann::ordered_json j;
  j["complete"] = complete;
  j["pool_size"] = pool_size;
  nlohmann::ordered_json src = nlohmann::ordered_json::array();
  for (const auto &[name, ls] : sources)
    src.push_back({{"name", name},
                   {"lines", ls.lines},
                   {"kept", ls.kept},
                   {"parse_errors", ls.parse_errors},
                   {"disallowed", ls.disallowed}});
  j["sources"] = src;
  j["items"] = items;
  j["duplicate_groups"] = duplicate_groups;
  j["capped_template"] = capped_template;
  j["rejected"] = {{"noop", rejected_noop},
                   {"forbidden", rejected_forbidden},
                   {"scaffold", rejected_scaffold},
                   {"apply_errors", apply_errors}};
  j["truncated_products"] = truncated_products;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto &[id, ts] : per_template)
    per[std::to_string(id)] = {
        {"items", ts.items}, {"no_match", ts.no_match}, {"records", ts.records}, {"products", ts.products}};
  j["per_template"] = per;
  return j.dump(2);
}

void write_corpus(const Corpus &c, const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir + ": " + ec.message());
  const std::filesystem::path base(dir);
  for (int s = 0; s < 3; ++s) write_records((base / (std::string(kSplitNames[s]) + ".jsonl")).string(), c.splits[s]);
  std::ofstream out(base / "stats.json", std::ios::binary);
  if (!out) throw DataError("cannot write stats in " + dir);
  out << c.stats.to_json() << '\n';
}

}  // namespace brs
