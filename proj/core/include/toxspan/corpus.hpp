#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toxspan/textproc.hpp"

namespace toxspan {

// One annotated comment. `gold` holds the sorted, deduplicated character
// offsets the annotators attributed toxicity to; an empty set is a valid
// annotation ("no toxic span"), while nullopt marks an unlabeled pool
// document (spans column "UNLABELED").
struct Document {
  std::int32_t id = -1;
  std::u32string text;
  std::optional<std::vector<std::int32_t>> gold = std::vector<std::int32_t>{};

  bool labeled() const { return gold.has_value(); }
};

// Split ratios as exact integer weights (80:10:10 by default), so the
// fractions w_i / (w_train + w_dev + w_test) sum to exactly 1.
struct SplitSpec {
  std::uint32_t train_weight = 80;
  std::uint32_t dev_weight = 10;
  std::uint32_t test_weight = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SplitResult {
  std::vector<Document> train, dev, test;
};

struct CorpusStats {
  std::int64_t n_documents = 0;
  std::int64_t n_tokens = 0;        // active tokens
  std::int64_t n_toxic_tokens = 0;
  std::int64_t n_empty_gold = 0;    // labeled documents with empty gold
  // (n_tokens - n_toxic_tokens) / n_toxic_tokens; nullopt when no toxic tokens.
  std::optional<double> imbalance_ratio;
};

struct SynthConfig {
  std::int32_t n_docs = 1000;
  std::uint64_t seed = 1;
  double empty_gold_frac = 0.05;  // documents generated with no lexicon word
  double lexicon_density = 1.0;   // probability a {T} slot receives a lexicon word
  bool unlabeled = false;         // generate a pool: gold withheld
  std::vector<std::u32string> lexicon;
  std::vector<std::u32string> fillers;
  std::vector<std::u32string> templates;  // patterns with {T} / {F} slots
};

// --- CSV corpus format -----------------------------------------------------
// Header columns "spans" and "text" in any order (extra columns ignored),
// RFC-4180 quoting. spans = bracketed integer list "[3, 4, 5]", "[]" for an
// empty annotation, or the literal "UNLABELED" for pool rows.

std::vector<Document> load_csv(const std::string& path);
void save_csv(const std::string& path, const std::vector<Document>& docs);

// Bracket-list helpers shared by the CSV and prediction-TSV formats.
std::vector<std::int32_t> parse_offset_list(std::string_view field);
std::string format_offset_list(const std::vector<std::int32_t>& offsets);

// Deterministic shuffle by spec.seed, then a largest-remainder partition of
// the shuffled order: each part gets floor(w_i*N/W) documents and the
// leftover goes to the parts with the largest remainders (ties broken
// train, dev, test). 80:10:10 over 7939 documents gives 6351/794/794.
SplitResult split(const std::vector<Document>& docs, const SplitSpec& spec);

// The sizes the above assigns for a corpus of n documents.
std::array<std::int64_t, 3> split_sizes(std::int64_t n, const SplitSpec& spec);

CorpusStats stats(const std::vector<Document>& docs,
                  const std::vector<LabeledSequence>& tokenized);

// Lexicon/filler/template defaults for desk-scale corpora.
SynthConfig default_synth_config();

// Each document instantiates one template; {F} slots get filler words, {T}
// slots get lexicon words (subject to empty_gold_frac and lexicon_density).
// gold is exactly the set of character offsets of inserted lexicon words.
std::vector<Document> generate_synthetic(const SynthConfig& cfg);

// tokenize + clean + project_gold over a corpus. Unlabeled documents get
// all-zero labels.
std::vector<LabeledSequence> prepare_sequences(const std::vector<Document>& docs,
                                               const CleaningConfig& cleaning);

inline LabeledSequence project_gold(const Document& doc, std::vector<TokenSpan> tokens) {
  static const std::vector<std::int32_t> kNoGold;
  return project_gold(doc.id, doc.gold ? *doc.gold : kNoGold, std::move(tokens));
}

} // namespace toxspan
