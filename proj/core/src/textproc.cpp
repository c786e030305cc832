#include "toxspan/textproc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toxspan/errors.hpp"
#include "toxspan/unicode.hpp"

namespace toxspan {

namespace {

constexpr std::string_view kDefaultContractions =
    "# Default contraction table: surface<TAB>expansion, lowercase surfaces.\n"
    "ain't\tam not\n"
    "aren't\tare not\n"
    "can't\tcan not\n"
    "could've\tcould have\n"
    "couldn't\tcould not\n"
    "didn't\tdid not\n"
    "doesn't\tdoes not\n"
    "don't\tdo not\n"
    "hadn't\thad not\n"
    "hasn't\thas not\n"
    "haven't\thave not\n"
    "he'd\the would\n"
    "he'll\the will\n"
    "he's\the is\n"
    "how's\thow is\n"
    "i'd\ti would\n"
    "i'll\ti will\n"
    "i'm\ti am\n"
    "i've\ti have\n"
    "isn't\tis not\n"
    "it'd\tit would\n"
    "it'll\tit will\n"
    "it's\tit is\n"
    "let's\tlet us\n"
    "mightn't\tmight not\n"
    "mustn't\tmust not\n"
    "shan't\tshall not\n"
    "she'd\tshe would\n"
    "she'll\tshe will\n"
    "she's\tshe is\n"
    "should've\tshould have\n"
    "shouldn't\tshould not\n"
    "that's\tthat is\n"
    "there's\tthere is\n"
    "they'd\tthey would\n"
    "they'll\tthey will\n"
    "they're\tthey are\n"
    "they've\tthey have\n"
    "wasn't\twas not\n"
    "we'd\twe would\n"
    "we'll\twe will\n"
    "we're\twe are\n"
    "we've\twe have\n"
    "weren't\twere not\n"
    "what's\twhat is\n"
    "where's\twhere is\n"
    "who'll\twho will\n"
    "who's\twho is\n"
    "won't\twill not\n"
    "would've\twould have\n"
    "wouldn't\twould not\n"
    "you'd\tyou would\n"
    "you'll\tyou will\n"
    "you're\tyou are\n"
    "you've\tyou have\n";

} // namespace

std::vector<TokenSpan> tokenize(std::u32string_view text) {
  std::vector<TokenSpan> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_space_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && !is_space_char(text[run_end])) ++run_end;

    std::size_t lo = i;
    std::size_t hi = run_end;
    while (lo < hi && is_punct_char(text[lo])) {
      tokens.push_back({std::u32string(1, text[lo]), static_cast<std::int32_t>(lo),
                        static_cast<std::int32_t>(lo + 1), true});
      ++lo;
    }
    std::size_t tail = hi;
    while (tail > lo && is_punct_char(text[tail - 1])) --tail;
    if (lo < tail) {
      tokens.push_back({std::u32string(text.substr(lo, tail - lo)),
                        static_cast<std::int32_t>(lo), static_cast<std::int32_t>(tail),
                        true});
    }
    for (std::size_t k = tail; k < hi; ++k) {
      tokens.push_back({std::u32string(1, text[k]), static_cast<std::int32_t>(k),
                        static_cast<std::int32_t>(k + 1), true});
    }
    i = run_end;
  }
  return tokens;
}

std::vector<TokenSpan> clean(std::vector<TokenSpan> tokens, const CleaningConfig& cfg) {
  for (TokenSpan& tok : tokens) {
    if (cfg.expand_contractions) {
      auto it = cfg.contraction_table.find(lower_ascii(tok.text));
      if (it != cfg.contraction_table.end()) tok.text = it->second;
    }
    if (cfg.remove_digits) {
      std::u32string kept;
      kept.reserve(tok.text.size());
      for (char32_t c : tok.text)
        if (!is_ascii_digit(c)) kept.push_back(c);
      tok.text = std::move(kept);
    }
    if (cfg.remove_fullstops && tok.text == U".") tok.text.clear();
    if (tok.text.empty()) tok.active = false;
  }
  return tokens;
}

LabeledSequence project_gold(std::int32_t doc_id, std::span<const std::int32_t> gold,
                             std::vector<TokenSpan> tokens) {
  LabeledSequence seq;
  seq.doc_id = doc_id;
  seq.labels.resize(tokens.size(), 0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const TokenSpan& tok = tokens[i];
    if (!tok.active) continue;
    auto it = std::lower_bound(gold.begin(), gold.end(), tok.start);
    if (it != gold.end() && *it < tok.end) seq.labels[i] = 1;
  }
  seq.tokens = std::move(tokens);
  return seq;
}

std::map<std::u32string, std::u32string> parse_contraction_table(std::string_view text) {
  std::map<std::u32string, std::u32string> table;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (pos > text.size()) break;
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
      throw validation_error("contraction table line " + std::to_string(line_no) +
                             ": expected surface<TAB>expansion");
    }
    std::u32string surface = utf8_decode(line.substr(0, tab));
    if (surface != lower_ascii(surface)) {
      throw validation_error("contraction table line " + std::to_string(line_no) +
                             ": surface must be lowercase");
    }
    table[std::move(surface)] = utf8_decode(line.substr(tab + 1));
    if (pos > text.size()) break;
  }
  return table;
}

std::map<std::u32string, std::u32string> load_contraction_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open contraction table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_contraction_table(buf.str());
}

std::string_view default_contraction_tsv() { return kDefaultContractions; }

CleaningConfig default_cleaning_config() {
  CleaningConfig cfg;
  cfg.contraction_table = parse_contraction_table(kDefaultContractions);
  return cfg;
}

} // namespace toxspan
