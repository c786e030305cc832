#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace toxspan {

// One token of a document. start/end are half-open character offsets into the
// ORIGINAL text and never change after tokenization; cleaning may rewrite
// `text` or clear `active`, nothing else.
struct TokenSpan {
  std::u32string text;
  std::int32_t start = 0;
  std::int32_t end = 0;
  bool active = true;
};

struct CleaningConfig {
  bool expand_contractions = true;
  bool remove_digits = true;
  bool remove_fullstops = true;
  // Lowercase contraction surface -> expansion ("don't" -> "do not").
  std::map<std::u32string, std::u32string> contraction_table;
};

// Token sequence of one document with aligned binary toxic labels and,
// after prediction, per-token probabilities.
struct LabeledSequence {
  std::int32_t doc_id = -1;
  std::vector<TokenSpan> tokens;
  std::vector<std::uint8_t> labels;  // 0/1, aligned to tokens
  std::vector<double> probs;         // empty, or aligned to tokens, each in [0,1]
};

// Whitespace split, then leading/trailing punctuation characters are peeled
// off as single-character tokens. Internal characters (apostrophes, hyphens,
// anything else) stay inside their token. Token spans slice the original
// text exactly; no token ever contains whitespace.
std::vector<TokenSpan> tokenize(std::u32string_view text);

// Per-token text rewrite: contraction expansion (single token, span kept),
// digit removal, full-stop removal. A token whose text ends up empty stays in
// the list but becomes inactive.
std::vector<TokenSpan> clean(std::vector<TokenSpan> tokens, const CleaningConfig& cfg);

// label_i = 1 iff token i is active and [start_i, end_i) intersects the gold
// offset set. `gold` must be sorted ascending.
LabeledSequence project_gold(std::int32_t doc_id, std::span<const std::int32_t> gold,
                             std::vector<TokenSpan> tokens);

// Contraction tables: one "surface<TAB>expansion" mapping per line, UTF-8,
// lowercase surfaces, '#' comments.
std::map<std::u32string, std::u32string> parse_contraction_table(std::string_view text);
std::map<std::u32string, std::u32string> load_contraction_table(const std::string& path);

// The built-in table (also shipped as core/data/contractions.tsv).
std::string_view default_contraction_tsv();

// All three flags on, default contraction table.
CleaningConfig default_cleaning_config();

} // namespace toxspan
