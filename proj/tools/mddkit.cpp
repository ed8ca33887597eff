// mddkit: command-line front end for the phonetiser, the noiser, the scorer
// and the corpus statistics. Exit codes: 0 success, 1 validation failure,
// 2 I/O failure. Diagnostics go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mddkit/mddkit.hpp"

namespace {

using namespace mddkit;

struct GlobalOptions {
  std::string inventory_path;
  std::string rules_path;
  bool strict = false;
  bool lenient = false;
  std::optional<std::uint64_t> seed;
  std::string format = "tsv";
};

struct Context {
  InventoryMap inventory;
  RuleSet rules;
};

Strictness strictness(const GlobalOptions& g, Strictness fallback) {
  if (g.strict) return Strictness::strict;
  if (g.lenient) return Strictness::lenient;
  return fallback;
}

ManifestFormat manifest_format(const std::string& name) {
  if (name == "tsv") return ManifestFormat::tsv;
  if (name == "jsonl") return ManifestFormat::jsonl;
  throw ConfigError("unknown manifest format '" + name + "'");
}

ReportFormat report_format(const std::string& name) {
  if (name == "table") return ReportFormat::table;
  if (name == "kv") return ReportFormat::kv;
  throw ConfigError("unknown report format '" + name + "'");
}

SequenceField sequence_field(const std::string& name) {
  if (name == "canonical") return SequenceField::canonical;
  if (name == "annotated") return SequenceField::annotated;
  if (name == "hypothesis") return SequenceField::hypothesis;
  throw ConfigError("unknown field '" + name + "'");
}

// Commands that phonetise need every rule output symbol in the inventory.
Context load_context(const GlobalOptions& g, bool phonetises = false) {
  Context ctx{g.inventory_path.empty() ? default_inventory() : load_inventory_file(g.inventory_path),
              g.rules_path.empty() ? default_rules() : load_rules_file(g.rules_path)};
  if (phonetises) ctx.rules.check_inventory(ctx.inventory);
  return ctx;
}

// "-" or empty means the standard stream.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "'");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::uint64_t effective_seed(const GlobalOptions& g, const char* verb) {
  const std::uint64_t seed = g.seed ? *g.seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                                                    std::random_device{}();
  std::cerr << "mddkit " << verb << ": seed " << seed << '\n';
  return seed;
}

struct NoiseOptions {
  double p_noise = 0.05;
  int max_noise = 3;
  std::string map_path;
  std::string weights = "1,1,1";
  std::string missing = "redraw";
  bool letters_only = false;
};

void add_noise_options(CLI::App* cmd, NoiseOptions& o) {
  cmd->add_option("--p-noise", o.p_noise, "Per-character noise probability")->capture_default_str();
  cmd->add_option("--max-noise", o.max_noise, "Upper bound of the per-line event count")->capture_default_str();
  cmd->add_option("--map", o.map_path, "Noise map file (char<TAB>sub1,sub2,...)");
  cmd->add_option("--weights", o.weights, "delete,substitute,insert weights")->capture_default_str();
  cmd->add_option("--missing-substitute", o.missing, "redraw|skip when a character has no substitutes")
      ->capture_default_str();
  cmd->add_flag("--letters-only", o.letters_only, "Only perturb letters, never diacritics or spaces");
}

NoiseConfig noise_config(const NoiseOptions& o, std::uint64_t seed) {
  NoiseConfig cfg;
  cfg.p_noise = o.p_noise;
  cfg.max_noise = o.max_noise;
  cfg.seed = seed;
  cfg.letters_only = o.letters_only;
  const auto parts = detail::split(o.weights, ',');
  if (parts.size() != 3) throw ConfigError("--weights expects three comma-separated numbers");
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      cfg.type_weights[i] = std::stod(std::string(parts[i]));
    } catch (const std::exception&) {
      throw ConfigError("--weights: not a number '" + std::string(parts[i]) + "'");
    }
  }
  if (o.missing == "redraw") cfg.missing_substitute = MissingSubstitute::redraw;
  else if (o.missing == "skip") cfg.missing_substitute = MissingSubstitute::skip;
  else throw ConfigError("--missing-substitute expects redraw or skip");
  cfg.validate();
  return cfg;
}

NoiseMap noise_map(const NoiseOptions& o) {
  return o.map_path.empty() ? build_default_noise_map() : load_noise_map_file(o.map_path);
}

int run_phonetise(const GlobalOptions& g, const std::string& in_path, const std::string& out_path) {
  const Context ctx = load_context(g, true);
  const Strictness mode = strictness(g, Strictness::strict);
  Input in(in_path);
  Output out(out_path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in.stream(), line)) {
    ++n;
    try {
      const auto text = normalize_orthography(std::u32string_view(utf8::decode(line)), ctx.rules);
      out.stream() << serialize(phonetise(text, ctx.rules, mode)) << '\n';
    } catch (const Error& e) {
      throw ManifestError(e.what(), n);
    }
  }
  out.finish();
  return 0;
}

int run_normalize(const GlobalOptions& g, const std::string& in_path, const std::string& out_path) {
  const Context ctx = load_context(g);
  const Strictness mode = strictness(g, Strictness::strict);
  Input in(in_path);
  Output out(out_path);
  NormalizeStats stats;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in.stream(), line)) {
    ++n;
    try {
      out.stream() << serialize(normalize_sequence(parse_sequence(line), ctx.inventory, mode, &stats)) << '\n';
    } catch (const Error& e) {
      throw ManifestError(e.what(), n);
    }
  }
  if (stats.unknown > 0) std::cerr << "mddkit normalize: " << stats.unknown << " unknown symbol(s) passed through\n";
  out.finish();
  return 0;
}

int run_noise(const GlobalOptions& g, const NoiseOptions& o, const std::string& in_path, const std::string& out_path) {
  const Context ctx = load_context(g);
  const NoiseConfig cfg = noise_config(o, effective_seed(g, "noise"));
  const NoiseMap map = noise_map(o);
  Input in(in_path);
  Output out(out_path);
  std::string line;
  std::size_t index = 0;
  while (std::getline(in.stream(), line)) {
    const auto text = normalize_orthography(std::u32string_view(utf8::decode(line)), ctx.rules);
    if (text.empty()) {
      out.stream() << "\t\t0\n";
    } else {
      Rng rng(derive_seed(cfg.seed, index));
      const auto noisy = generate_noisy_text(text, map, cfg, rng);
      out.stream() << utf8::encode(text) << '\t' << utf8::encode(noisy.text) << '\t' << noisy.count << '\n';
    }
    ++index;
  }
  out.finish();
  return 0;
}

struct SynthArgs {
  std::string input;
  std::string output;
  std::string noisy_out;
  std::string id_prefix = "syn";
};

int run_synth(const GlobalOptions& g, const NoiseOptions& o, const SynthArgs& a) {
  const Context ctx = load_context(g, true);
  const NoiseConfig cfg = noise_config(o, effective_seed(g, "synth"));
  const NoiseMap map = noise_map(o);
  SynthOptions opts;
  opts.id_prefix = a.id_prefix;
  opts.noisy_mode = strictness(g, Strictness::lenient);
  Input in(a.input);
  Output out(a.output);
  std::optional<Output> noisy_out;
  if (!a.noisy_out.empty()) {
    noisy_out.emplace(a.noisy_out);
    noisy_out->stream() << "id\tnoisy_text\tnoise_count\n";
  }
  ManifestWriter writer(out.stream(), manifest_format(g.format));
  std::string line;
  std::size_t index = 0;
  std::size_t written = 0;
  std::size_t skipped = 0;
  while (std::getline(in.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto outcome = make_synthetic_record(index, line, map, cfg, ctx.rules, opts);
    if (outcome.record) {
      const auto& r = *outcome.record;
      writer.write(UtteranceRecord{r.id, r.original_text, r.canonical_phonemes, r.annotated_phonemes, std::nullopt});
      if (noisy_out) noisy_out->stream() << r.id << '\t' << r.noisy_text << '\t' << r.applied_noise_count << '\n';
      ++written;
    } else {
      std::cerr << "mddkit synth: line " << index + 1 << " skipped: " << outcome.skip_reason << '\n';
      ++skipped;
    }
    ++index;
  }
  std::cerr << "mddkit synth: " << written << " record(s) written, " << skipped << " skipped\n";
  out.finish();
  if (noisy_out) noisy_out->finish();
  return 0;
}

struct ScoreArgs {
  std::string manifest;
  std::string output;
  std::string report = "table";
  std::string per_reference = "annotated";
  std::string hypothesis_source = "field";
};

int run_score(const GlobalOptions& g, const ScoreArgs& a) {
  const Context ctx = load_context(g);
  const Strictness mode = strictness(g, Strictness::strict);
  ScoreOptions opts;
  if (a.per_reference == "annotated") opts.per_reference = PerReference::annotated;
  else if (a.per_reference == "canonical") opts.per_reference = PerReference::canonical;
  else throw ConfigError("--per-reference expects annotated or canonical");
  if (a.hypothesis_source != "field" && a.hypothesis_source != "annotated" && a.hypothesis_source != "canonical") {
    throw ConfigError("--hypothesis-source expects field, annotated or canonical");
  }
  const ReportFormat report = report_format(a.report);

  Input in(a.manifest);
  ManifestReader reader(in.stream(), manifest_format(g.format), ctx.inventory, mode);
  ScoreCounts total;
  std::size_t skipped = 0;
  auto reject = [&](const std::string& what, std::size_t line) {
    if (mode == Strictness::strict) throw ManifestError(what, line);
    std::cerr << "mddkit score: line " << line << " skipped: " << what << '\n';
    ++skipped;
  };
  for (;;) {
    std::optional<UtteranceRecord> rec;
    try {
      rec = reader.next();
    } catch (const ManifestError& e) {
      if (mode == Strictness::strict) throw;
      std::cerr << "mddkit score: " << e.what() << " (skipped)\n";
      ++skipped;
      continue;
    }
    if (!rec) break;
    if (!rec->annotated) {
      reject("record '" + rec->id + "' has no annotated sequence", reader.line());
      continue;
    }
    const PhonemeSequence* hyp = a.hypothesis_source == "annotated"   ? &*rec->annotated
                                 : a.hypothesis_source == "canonical" ? &rec->canonical
                                 : rec->hypothesis                    ? &*rec->hypothesis
                                                                      : nullptr;
    if (!hyp) {
      reject("record '" + rec->id + "' has no hypothesis sequence", reader.line());
      continue;
    }
    total += score_utterance(LabeledUtterance{rec->canonical, *rec->annotated, *hyp}, opts);
  }
  if (reader.normalize_stats().unknown > 0) {
    std::cerr << "mddkit score: " << reader.normalize_stats().unknown << " unknown symbol(s) passed through\n";
  }
  if (total.n_utterances == 0) throw UndefinedMetric("no scorable records");
  Output out(a.output);
  out.stream() << emit_report(finalize_report(total), report);
  out.finish();
  return 0;
}

struct StatsArgs {
  std::string manifest;
  std::string manifest_b;
  std::string field = "canonical";
  std::string field_b = "canonical";
  std::string output;
  std::string report = "table";
  std::size_t top = 0;
};

PhonemeHistogram histogram_of(const GlobalOptions& g, const Context& ctx, const std::string& path,
                              const std::string& field) {
  Input in(path);
  const auto records =
      load_manifest(in.stream(), manifest_format(g.format), ctx.inventory, strictness(g, Strictness::lenient));
  return phoneme_histogram(records, sequence_field(field));
}

int run_stats(const GlobalOptions& g, const StatsArgs& a) {
  const Context ctx = load_context(g);
  const auto h = histogram_of(g, ctx, a.manifest, a.field);
  Output out(a.output);
  out.stream() << emit_report(h, report_format(a.report), a.top);
  out.finish();
  return 0;
}

int run_compare(const GlobalOptions& g, const StatsArgs& a) {
  const Context ctx = load_context(g);
  const auto ha = histogram_of(g, ctx, a.manifest, a.field);
  const auto hb = histogram_of(g, ctx, a.manifest_b, a.field_b);
  Output out(a.output);
  out.stream() << emit_report(compare_distributions(ha, hb), report_format(a.report), a.top);
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic phoneme toolkit: grapheme-to-phoneme, noise injection, mispronunciation scoring"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--inventory", g.inventory_path, "Inventory file (raw<TAB>canonical + [canonical])");
  app.add_option("--rules", g.rules_path, "Phonetiser rules file");
  auto* strict = app.add_flag("--strict", g.strict, "Fail on the first invalid item");
  app.add_flag("--lenient", g.lenient, "Skip or pass through invalid items")->excludes(strict);
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--format", g.format, "Manifest format: tsv|jsonl")->capture_default_str();

  std::string in_path, out_path;
  NoiseOptions noise_opts;
  SynthArgs synth_args;
  ScoreArgs score_args;
  StatsArgs stats_args;

  auto* phon = app.add_subcommand("phonetise", "Diacritized text lines -> phoneme lines");
  phon->add_option("-i,--input", in_path, "Input file (default stdin)");
  phon->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* norm = app.add_subcommand("normalize", "Map raw phonetiser symbols to the canonical inventory");
  norm->add_option("-i,--input", in_path, "Input file (default stdin)");
  norm->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* noise = app.add_subcommand("noise", "Perturb text lines; emits original<TAB>noisy<TAB>count");
  noise->add_option("-i,--input", in_path, "Input file (default stdin)");
  noise->add_option("-o,--output", out_path, "Output file (default stdout)");
  add_noise_options(noise, noise_opts);

  auto* synth = app.add_subcommand("synth", "Build a synthetic mispronunciation manifest from text lines");
  synth->add_option("-i,--input", synth_args.input, "Input file (default stdin)");
  synth->add_option("-o,--output", synth_args.output, "Manifest output (default stdout)");
  synth->add_option("--noisy-out", synth_args.noisy_out, "Also write id<TAB>noisy_text<TAB>noise_count");
  synth->add_option("--id-prefix", synth_args.id_prefix, "Record id prefix")->capture_default_str();
  add_noise_options(synth, noise_opts);

  auto* score = app.add_subcommand("score", "Score a manifest with canonical, annotated and hypothesis columns");
  score->add_option("manifest", score_args.manifest, "Manifest file (default stdin)");
  score->add_option("-o,--output", score_args.output, "Report output (default stdout)");
  score->add_option("--report", score_args.report, "table|kv")->capture_default_str();
  score->add_option("--per-reference", score_args.per_reference, "annotated|canonical")->capture_default_str();
  score->add_option("--hypothesis-source", score_args.hypothesis_source,
                    "field|annotated|canonical: where the system output comes from")
      ->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Phoneme histogram of one manifest field");
  stats->add_option("manifest", stats_args.manifest, "Manifest file (default stdin)");
  stats->add_option("--field", stats_args.field, "canonical|annotated|hypothesis")->capture_default_str();
  stats->add_option("--top", stats_args.top, "Only the N most frequent symbols");
  stats->add_option("-o,--output", stats_args.output, "Report output (default stdout)");
  stats->add_option("--report", stats_args.report, "table|kv")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Compare the phoneme distributions of two manifests");
  compare->add_option("manifest_a", stats_args.manifest, "First manifest")->required();
  compare->add_option("manifest_b", stats_args.manifest_b, "Second manifest")->required();
  compare->add_option("--field-a", stats_args.field, "Field of the first manifest")->capture_default_str();
  compare->add_option("--field-b", stats_args.field_b, "Field of the second manifest")->capture_default_str();
  compare->add_option("--top", stats_args.top, "Only the N largest differences");
  compare->add_option("-o,--output", stats_args.output, "Report output (default stdout)");
  compare->add_option("--report", stats_args.report, "table|kv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ios::sync_with_stdio(false);
    if (*phon) return run_phonetise(g, in_path, out_path);
    if (*norm) return run_normalize(g, in_path, out_path);
    if (*noise) return run_noise(g, noise_opts, in_path, out_path);
    if (*synth) return run_synth(g, noise_opts, synth_args);
    if (*score) return run_score(g, score_args);
    if (*stats) return run_stats(g, stats_args);
    if (*compare) return run_compare(g, stats_args);
  } catch (const IoError& e) {
    std::cerr << "mddkit: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "mddkit: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
