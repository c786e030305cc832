#include "toxspan/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "toxspan/errors.hpp"
#include "toxspan/rng.hpp"
#include "toxspan/unicode.hpp"

namespace toxspan {

namespace {

// RFC-4180 reader: quoted fields may contain commas, doubled quotes and
// newlines; records end at an unquoted LF (CRLF tolerated).
std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t i = 0;
  const std::size_t n = content.size();

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };

  while (i < n) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && content[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field.push_back(c);
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted)
          throw io_error(path + ": stray quote in unquoted field");
        in_quotes = true;
        field_was_quoted = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < n && content[i + 1] == '\n') {
          end_record();
          i += 2;
        } else {
          field.push_back(c);
          ++i;
        }
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field.push_back(c);
        ++i;
        break;
    }
  }
  if (in_quotes) throw io_error(path + ": unterminated quoted field");
  if (!field.empty() || field_was_quoted || !row.empty()) end_record();
  return rows;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

std::vector<std::int32_t> parse_offset_list(std::string_view field) {
  std::string_view s = trim(field);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw validation_error("expected bracketed offset list, got '" + std::string(field) + "'");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<std::int32_t> offsets;
  if (s.empty()) return offsets;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string_view item = trim(s.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos));
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
      throw validation_error("malformed offset '" + std::string(item) + "' in list");
    long long value = 0;
    for (char c : item) {
      value = value * 10 + (c - '0');
      if (value > INT32_MAX) throw validation_error("offset out of range in list");
    }
    offsets.push_back(static_cast<std::int32_t>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  return offsets;
}

std::string format_offset_list(const std::vector<std::int32_t>& offsets) {
  std::string out = "[";
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(offsets[i]);
  }
  out += "]";
  return out;
}

std::vector<Document> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rows = parse_csv(buf.str(), path);
  if (rows.empty()) throw validation_error(path + ": missing header row");

  std::size_t spans_col = SIZE_MAX, text_col = SIZE_MAX;
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    if (rows[0][c] == "spans") spans_col = c;
    else if (rows[0][c] == "text") text_col = c;
  }
  if (spans_col == SIZE_MAX || text_col == SIZE_MAX)
    throw validation_error(path + ": header must contain columns 'spans' and 'text'");

  std::vector<Document> docs;
  docs.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::int32_t id = static_cast<std::int32_t>(r - 1);
    const auto& row = rows[r];
    if (row.size() <= std::max(spans_col, text_col))
      throw validation_error(path + ": row " + std::to_string(id) + ": too few fields");
    Document doc;
    doc.id = id;
    doc.text = utf8_decode(row[text_col]);
    const std::string& spans = row[spans_col];
    if (trim(spans) == "UNLABELED") {
      doc.gold.reset();
    } else {
      std::vector<std::int32_t> gold;
      try {
        gold = parse_offset_list(spans);
      } catch (const validation_error& e) {
        throw validation_error(path + ": row " + std::to_string(id) + ": " + e.what());
      }
      const auto len = static_cast<std::int32_t>(doc.text.size());
      for (std::int32_t o : gold) {
        if (o >= len)
          throw validation_error(path + ": row " + std::to_string(id) + ": offset " +
                                 std::to_string(o) + " >= text length " +
                                 std::to_string(len));
      }
      doc.gold = std::move(gold);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

void save_csv(const std::string& path, const std::vector<Document>& docs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write corpus file: " + path);
  out << "spans,text\n";
  for (const Document& doc : docs) {
    const std::string spans = doc.gold ? format_offset_list(*doc.gold) : "UNLABELED";
    out << csv_escape(spans) << ',' << csv_escape(utf8_encode(doc.text)) << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

void SplitSpec::validate() const {
  if (train_weight + dev_weight + test_weight == 0)
    throw validation_error("split weights must not all be zero");
}

std::array<std::int64_t, 3> split_sizes(std::int64_t n, const SplitSpec& spec) {
  spec.validate();
  const std::uint64_t w[3] = {spec.train_weight, spec.dev_weight, spec.test_weight};
  const std::uint64_t total = w[0] + w[1] + w[2];
  std::array<std::int64_t, 3> sizes{};
  std::uint64_t rem[3];
  std::int64_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t prod = w[i] * static_cast<std::uint64_t>(n);
    sizes[i] = static_cast<std::int64_t>(prod / total);
    rem[i] = prod % total;
    assigned += sizes[i];
  }
  std::int64_t leftover = n - assigned;
  int order[3] = {0, 1, 2};
  std::stable_sort(order, order + 3, [&](int a, int b) { return rem[a] > rem[b]; });
  for (int k = 0; k < 3 && leftover > 0; ++k, --leftover) ++sizes[order[k]];
  return sizes;
}

SplitResult split(const std::vector<Document>& docs, const SplitSpec& spec) {
  if (docs.empty()) throw validation_error("split: empty corpus");
  const auto sizes = split_sizes(static_cast<std::int64_t>(docs.size()), spec);
  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(spec.seed);
  rng.shuffle(order);

  SplitResult result;
  std::vector<Document>* parts[3] = {&result.train, &result.dev, &result.test};
  std::size_t pos = 0;
  for (int p = 0; p < 3; ++p) {
    parts[p]->reserve(static_cast<std::size_t>(sizes[p]));
    for (std::int64_t k = 0; k < sizes[p]; ++k) parts[p]->push_back(docs[order[pos++]]);
  }
  return result;
}

CorpusStats stats(const std::vector<Document>& docs,
                  const std::vector<LabeledSequence>& tokenized) {
  if (docs.size() != tokenized.size())
    throw validation_error("stats: documents and tokenized sequences not aligned");
  CorpusStats s;
  s.n_documents = static_cast<std::int64_t>(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (tokenized[i].doc_id != docs[i].id)
      throw validation_error("stats: doc_id mismatch at index " + std::to_string(i));
    if (docs[i].labeled() && docs[i].gold->empty()) ++s.n_empty_gold;
    const auto& seq = tokenized[i];
    for (std::size_t t = 0; t < seq.tokens.size(); ++t) {
      if (!seq.tokens[t].active) continue;
      ++s.n_tokens;
      if (seq.labels[t]) ++s.n_toxic_tokens;
    }
  }
  if (s.n_toxic_tokens > 0) {
    s.imbalance_ratio = static_cast<double>(s.n_tokens - s.n_toxic_tokens) /
                        static_cast<double>(s.n_toxic_tokens);
  }
  return s;
}

SynthConfig default_synth_config() {
  SynthConfig cfg;
  cfg.lexicon = {U"idiot",  U"moron",   U"fool",      U"clown",     U"loser",
                 U"jerk",   U"dummy",   U"twit",      U"buffoon",   U"nitwit",
                 U"dolt",   U"oaf",     U"dunce",     U"simpleton", U"blockhead",
                 U"numskull"};
  cfg.fillers = {U"the",     U"a",        U"you",      U"are",     U"is",
                 U"this",    U"that",     U"very",     U"really",  U"quite",
                 U"so",      U"totally",  U"just",     U"my",      U"friend",
                 U"neighbor", U"article", U"comment",  U"opinion", U"today",
                 U"always",  U"never",    U"people",   U"everyone", U"somehow",
                 U"honestly", U"frankly", U"simply",   U"truly",   U"utterly"};
  cfg.templates = {
      U"you are a {T} and everyone here knows it",
      U"what a {T} thing to say about the {F}",
      U"this {F} was clearly written by a {T}",
      U"only a {T} would believe this {F} {F}",
      U"stop acting like a {T} you absolute {T}",
      U"honestly the {F} here is {F} but you are still a {T}",
      U"{T}! that was a {F} move and you know it",
      U"don't be such a {T} about the {F}",
      U"my {F} thinks you are a {T} and i agree",
      U"some {T} wrote this {F} about 100 different people",
      U"the {F} was {F} until some {T} ruined it for everyone",
      U"people like you {T} make every {F} so much worse",
  };
  return cfg;
}

std::vector<Document> generate_synthetic(const SynthConfig& cfg) {
  if (cfg.lexicon.empty() || cfg.templates.empty() || cfg.fillers.empty())
    throw validation_error("generate_synthetic: lexicon, fillers and templates must be nonempty");
  if (cfg.n_docs < 0) throw validation_error("generate_synthetic: n_docs < 0");

  SplitMix64 rng(cfg.seed);
  std::vector<Document> docs;
  docs.reserve(static_cast<std::size_t>(cfg.n_docs));
  for (std::int32_t d = 0; d < cfg.n_docs; ++d) {
    const bool empty_gold = rng.next_double() < cfg.empty_gold_frac;
    const std::u32string& tmpl = cfg.templates[rng.next_below(cfg.templates.size())];

    Document doc;
    doc.id = d;
    std::vector<std::int32_t> gold;
    std::size_t i = 0;
    while (i < tmpl.size()) {
      if (tmpl[i] == U'{' && i + 2 < tmpl.size() && tmpl[i + 2] == U'}' &&
          (tmpl[i + 1] == U'T' || tmpl[i + 1] == U'F')) {
        const bool toxic_slot = tmpl[i + 1] == U'T';
        const bool insert_toxic =
            toxic_slot && !empty_gold && rng.next_double() < cfg.lexicon_density;
        const std::u32string& word =
            insert_toxic ? cfg.lexicon[rng.next_below(cfg.lexicon.size())]
                         : cfg.fillers[rng.next_below(cfg.fillers.size())];
        const auto start = static_cast<std::int32_t>(doc.text.size());
        doc.text += word;
        if (insert_toxic) {
          for (std::int32_t o = start; o < start + static_cast<std::int32_t>(word.size()); ++o)
            gold.push_back(o);
        }
        i += 3;
      } else {
        doc.text.push_back(tmpl[i]);
        ++i;
      }
    }
    if (cfg.unlabeled) doc.gold.reset();
    else doc.gold = std::move(gold);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<LabeledSequence> prepare_sequences(const std::vector<Document>& docs,
                                               const CleaningConfig& cleaning) {
  std::vector<LabeledSequence> seqs;
  seqs.reserve(docs.size());
  for (const Document& doc : docs)
    seqs.push_back(project_gold(doc, clean(tokenize(doc.text), cleaning)));
  return seqs;
}

} // namespace toxspan
