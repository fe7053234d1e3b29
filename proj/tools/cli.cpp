#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "normexp/expander.hpp"
#include "normexp/occurrences.hpp"
#include "normexp/pattern.hpp"
#include "normexp/stream.hpp"
#include "normexp/transforms.hpp"
#include "normexp/verify.hpp"

namespace normexp::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind;
  unsigned base = 0;
  std::optional<unsigned> order;
  std::string schedule = "practical";
  std::string epsilon_form = "derivation";
  std::vector<std::uint64_t> prefixes;
  std::vector<std::size_t> lengths;
  std::string input;
  std::string output;
  std::string telemetry;
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::string claim = "all";
  std::optional<unsigned> max_stages;
  std::uint64_t scan_bound = 100'000'000;
  std::uint64_t table_cap = std::uint64_t{1} << 24;
  std::string format = "ascii";
};

DigitFormat parse_format(const std::string& f) { return f == "binary" ? DigitFormat::binary : DigitFormat::ascii; }

// Destination that is either a file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

class Source {
 public:
  Source(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path + "' for reading");
      stream_ = file_.get();
    }
  }
  std::istream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_;
};

class SymbolWriter {
 public:
  SymbolWriter(std::ostream& out, Alphabet alphabet, DigitFormat format) : out_(out), format_(format) {
    if (format == DigitFormat::ascii && alphabet.base() > 10) {
      throw ArgumentError("ASCII output needs base <= 10 (got " + std::to_string(alphabet.base()) +
                          "); use --format binary");
    }
    buffer_.reserve(kChunk);
  }
  ~SymbolWriter() { flush(); }

  void put(Symbol s) {
    buffer_.push_back(format_ == DigitFormat::ascii ? static_cast<char>('0' + s) : static_cast<char>(s));
    if (buffer_.size() == kChunk) flush();
  }
  void flush() {
    out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    buffer_.clear();
  }

 private:
  static constexpr std::size_t kChunk = 1 << 16;
  std::ostream& out_;
  DigitFormat format_;
  std::vector<char> buffer_;
};

void write_word(std::ostream& out, const FiniteWord& w, DigitFormat format) {
  SymbolWriter writer(out, w.alphabet(), format);
  for (Symbol s : w.symbols()) writer.put(s);
}

std::string field(const std::optional<Rational>& r, bool numerator) {
  if (!r) return "";
  return (numerator ? numerator_of(*r) : denominator_of(*r)).str();
}

std::string quoted_word(const FiniteWord& w) {
  if (w.alphabet().base() <= 10) return "\"" + w.to_digits() + "\"";
  std::string out = "\"";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w.storage()[i]);
  return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const DigitFormat format = parse_format(c.format);
  Sink sink(c.output, out);
  if (c.kind == "champernowne") {
    if (c.prefixes.size() != 1 || c.prefixes[0] < 1) throw ArgumentError("--prefix takes one length >= 1");
    ChampernowneStream stream(c.base);
    SymbolWriter writer(sink.stream(), stream.alphabet(), format);
    for (std::uint64_t i = 0; i < c.prefixes[0]; ++i) writer.put(*stream.next());
  } else if (c.kind == "pattern") {
    if (!c.order) throw ArgumentError("--kind pattern needs --order");
    PatternWord pattern = champernowne_like(*c.order, c.base);
    FiniteWord word = pattern.word();
    if (!c.prefixes.empty()) {
      if (c.prefixes.size() != 1) throw ArgumentError("--prefix takes one length");
      word = prefix(word, static_cast<std::size_t>(c.prefixes[0]));
    }
    write_word(sink.stream(), word, format);
  } else {
    throw ArgumentError("unknown --kind '" + c.kind + "'");
  }
  sink.finish();
  return kSuccess;
}

void write_stage_row(std::ostream& csv, const StageRecord& r, const std::string& status) {
  auto num = [](const Rational& x) { return numerator_of(x).str(); };
  auto den = [](const Rational& x) { return denominator_of(x).str(); };
  const bool ran = status == "accepted" || status == "partial";
  csv << r.index << ',' << r.order << ',' << r.next_order << ',' << status << ',' << num(r.epsilon) << ','
      << den(r.epsilon) << ',' << num(r.c_order) << ',' << den(r.c_order) << ',';
  if (ran) {
    csv << r.segment_length << ',' << r.source_start << ',' << r.source_end << ',' << r.source_dropped << ','
        << r.output_start << ',' << r.output_end << ',';
  } else if (status == "failed") {
    csv << r.segment_length << ",,,,,,";
  } else {
    csv << ",,,,,,";
  }
  csv << field(r.realized_delta, true) << ',' << field(r.realized_delta, false) << ','
      << field(r.expanded_delta, true) << ',' << field(r.expanded_delta, false) << ','
      << field(r.joint_delta, true) << ',' << field(r.joint_delta, false) << ',';
  csv << "\"eps~" << to_scientific(r.epsilon);
  if (r.realized_delta) csv << " delta~" << to_scientific(*r.realized_delta);
  if (r.expanded_delta) csv << " expanded~" << to_scientific(*r.expanded_delta);
  csv << "\"\n";
}

int cmd_expand(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const DigitFormat format = parse_format(c.format);
  const Alphabet source_alphabet(c.base);
  if (c.prefixes.size() > 1) throw ArgumentError("--prefix takes one length");

  ExpansionSchedule schedule;
  if (c.schedule == "practical") {
    schedule = ExpansionSchedule::practical(c.base);
  } else if (c.schedule == "theorem") {
    const EpsilonForm form = c.epsilon_form == "printed" ? EpsilonForm::printed : EpsilonForm::derivation;
    schedule = ExpansionSchedule::theorem(c.base, form);
  } else {
    throw ArgumentError("unknown --schedule '" + c.schedule + "'");
  }
  schedule.max_stages = c.max_stages;
  schedule.scan.scan_bound = c.scan_bound;
  if (format == DigitFormat::ascii && c.base + 1 > 10) {
    throw ArgumentError("ASCII output needs an expanded base <= 10; use --format binary");
  }

  std::unique_ptr<Source> source_file;
  StreamPtr source;
  if (!c.input.empty()) {
    source_file = std::make_unique<Source>(c.input, in);
    source = std::make_unique<IstreamDigitStream>(source_alphabet, source_file->stream(), format);
  } else {
    if (c.prefixes.empty()) throw ArgumentError("expanding the Champernowne source needs --prefix");
    source = std::make_unique<ChampernowneStream>(c.base);
  }
  if (!c.prefixes.empty()) source = std::make_unique<TakeStream>(std::move(source), c.prefixes[0]);

  std::unique_ptr<Sink> telemetry;
  if (!c.telemetry.empty()) telemetry = std::make_unique<Sink>(c.telemetry, out);

  Expander expander(std::move(source), schedule);
  {
    Sink sink(c.output, out);
    {
      SymbolWriter writer(sink.stream(), expander.alphabet(), format);
      while (auto s = expander.next()) writer.put(*s);
    }
    sink.finish();
  }

  const auto stages = expander.stages();
  const auto failure = expander.failure();
  if (telemetry) {
    auto& csv = telemetry->stream();
    csv << "# normexp-stages v1\n";
    csv << "stage,order,next_order,status,epsilon_num,epsilon_den,c_order_num,c_order_den,segment_length,"
           "source_start,source_end,source_dropped,output_start,output_end,realized_delta_num,"
           "realized_delta_den,expanded_delta_num,expanded_delta_den,joint_delta_num,joint_delta_den,summary\n";
    for (const auto& r : stages) {
      write_stage_row(csv, r, r.status == StageStatus::accepted ? "accepted" : "partial");
    }
    if (c.max_stages && *c.max_stages == 0) {
      write_stage_row(csv, plan_stage(schedule, c.base, 1), "planned");
    }
    if (failure) {
      try {
        StageRecord r = plan_stage(schedule, c.base, failure->stage);
        r.segment_length = failure->scanned;
        r.realized_delta = failure->best_delta;
        write_stage_row(csv, r, "failed");
      } catch (const ResourceError&) {
      }
    }
    telemetry->finish();
  }

  err << "expanded " << expander.source_expanded() << " source symbols into " << expander.position()
      << " symbols over " << stages.size() << " stage(s)\n";
  if (failure) {
    err << "schedule error at stage " << failure->stage << ": " << failure->message << '\n';
    return kScheduleError;
  }
  return kSuccess;
}

int cmd_reduce(const RunConfig& c, std::istream& in, std::ostream& out) {
  const DigitFormat format = parse_format(c.format);
  const Alphabet expanded = Alphabet(c.base).expanded();
  Source source(c.input, in);
  ReduceStream reduced(std::make_unique<IstreamDigitStream>(expanded, source.stream(), format));
  Sink sink(c.output, out);
  {
    SymbolWriter writer(sink.stream(), reduced.alphabet(), format);
    while (auto s = reduced.next()) writer.put(*s);
  }
  sink.finish();
  return kSuccess;
}

int cmd_discrepancy(const RunConfig& c, std::istream& in, std::ostream& out) {
  const DigitFormat format = parse_format(c.format);
  const Alphabet alphabet(c.base);
  if (c.lengths.empty()) throw ArgumentError("--lengths needs at least one block length");
  TableOptions tables{c.table_cap, false};
  for (std::size_t len : c.lengths) OccurrenceTable probe(alphabet, len, tables);  // cap check up front

  Source source(c.input, in);
  IstreamDigitStream stream(alphabet, source.stream(), format);
  const FiniteWord word = take(stream, c.prefixes.empty() ? UINT64_MAX : c.prefixes.back());

  std::vector<std::uint64_t> checkpoints = c.prefixes;
  if (checkpoints.empty()) checkpoints.push_back(word.size());

  Sink sink(c.output, out);
  auto& csv = sink.stream();
  csv << "# normexp-discrepancy v1\n";
  csv << "prefix_length,block_length,delta_numerator,delta_denominator,witness_block\n";
  for (std::size_t len : c.lengths) {
    WordStream replay(word);
    for (const auto& r : discrepancy_series(replay, len, checkpoints, tables)) {
      csv << r.symbols << ',' << r.block_length << ',' << numerator_of(r.delta).str() << ','
          << denominator_of(r.delta).str() << ',' << quoted_word(r.witness) << '\n';
    }
  }
  sink.finish();
  return kSuccess;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  verify::OracleOptions options;
  options.seed = c.seed;
  options.trials = c.trials;
  std::optional<unsigned> base;
  if (c.base != 0) base = c.base;
  const auto reports = verify::run_claim(c.claim, base, c.order, options);

  Sink sink(c.output, out);
  verify::write_csv(sink.stream(), reports);
  sink.finish();
  verify::write_text(err, reports);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return passed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"normexp: insert a new symbol into a normal word, keeping it normal"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Symbol encoding of digit files")
        ->check(CLI::IsMember({"ascii", "binary"}));
  };

  auto* generate = app.add_subcommand("generate", "Write a Champernowne stream prefix or a pattern word");
  generate->add_option("--kind", c.kind)->required()->check(CLI::IsMember({"champernowne", "pattern"}));
  generate->add_option("--base", c.base, "Source base b")->required()->check(CLI::Range(1u, 255u));
  generate->add_option("--order", c.order, "Pattern order")->check(CLI::Range(1u, 64u));
  generate->add_option("--prefix", c.prefixes, "Number of symbols")->delimiter(',');
  generate->add_option("--output", c.output);
  add_format(generate);

  auto* expand = app.add_subcommand("expand", "Expand a base-b stream into base b+1");
  expand->add_option("--base", c.base, "Source base b")->required()->check(CLI::Range(2u, 255u));
  expand->add_option("--schedule", c.schedule)->check(CLI::IsMember({"practical", "theorem"}));
  expand->add_option("--epsilon-form", c.epsilon_form, "Threshold reading in theorem mode")
      ->check(CLI::IsMember({"derivation", "printed"}));
  expand->add_option("--prefix", c.prefixes, "Source symbols to consume");
  expand->add_option("--input", c.input, "Source digit file (default: Champernowne stream)");
  expand->add_option("--output", c.output);
  expand->add_option("--telemetry", c.telemetry, "Stage telemetry CSV");
  expand->add_option("--max-stages", c.max_stages);
  expand->add_option("--scan-bound", c.scan_bound, "Source symbols scanned per stage before failing")
      ->check(CLI::PositiveNumber);
  add_format(expand);

  auto* reduce_cmd = app.add_subcommand("reduce", "Delete the new symbol from a base-(b+1) stream");
  reduce_cmd->add_option("--base", c.base, "Source base b")->required()->check(CLI::Range(2u, 255u));
  reduce_cmd->add_option("--input", c.input);
  reduce_cmd->add_option("--output", c.output);
  add_format(reduce_cmd);

  auto* disc = app.add_subcommand("discrepancy", "Exact aligned-block discrepancy of a digit file");
  disc->add_option("--base", c.base, "Alphabet base of the input")->required()->check(CLI::Range(2u, 256u));
  disc->add_option("--lengths", c.lengths, "Block lengths")->required()->delimiter(',');
  disc->add_option("--prefix", c.prefixes, "Prefix lengths (checkpoints)")->delimiter(',');
  disc->add_option("--input", c.input);
  disc->add_option("--output", c.output);
  disc->add_option("--table-cap", c.table_cap, "Largest block table");
  add_format(disc);

  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force claim oracles");
  verify_cmd->add_option("--claim", c.claim, "Claim name or 'all'");
  verify_cmd->add_option("--base", c.base)->check(CLI::Range(1u, 255u));
  verify_cmd->add_option("--order", c.order)->check(CLI::Range(1u, 64u));
  verify_cmd->add_option("--seed", c.seed);
  verify_cmd->add_option("--trials", c.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output", c.output, "Oracle CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (generate->parsed()) return cmd_generate(c, out);
    if (expand->parsed()) return cmd_expand(c, in, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(c, in, out);
    if (disc->parsed()) return cmd_discrepancy(c, in, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out, err);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ScheduleError& e) {
    err << "schedule error: " << e.what() << '\n';
    return kScheduleError;
  } catch (const TruncationError& e) {
    err << "input too short: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace normexp::cli
