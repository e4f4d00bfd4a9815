#include "syndiv/parse_stats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace syndiv {

namespace {

struct MeanAccumulator {
  double sum = 0.0;
  std::size_t count = 0;

  void add(double value) {
    sum += value;
    ++count;
  }
  std::optional<double> mean() const {
    if (count == 0) {
      return std::nullopt;
    }
    return sum / static_cast<double>(count);
  }
};

std::string fixed(double value, int decimals, int width) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%*.*f", width, decimals, value);
  return buffer;
}

// An absent value renders as an em dash, padded to the same display width.
std::string cell(const std::optional<double>& value, int decimals, int width) {
  if (value) {
    return fixed(*value, decimals, width);
  }
  std::string out(static_cast<std::size_t>(width - 1), ' ');
  out += "—";
  return out;
}

void append_csv_value(std::string& out, const std::optional<double>& value) {
  out.push_back(',');
  if (value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", *value);
    out += buffer;
  }
}

}  // namespace

ParseStats aggregate_stats(const Corpus& corpus) {
  if (corpus.items.empty()) {
    throw Error(ErrorKind::EmptyCorpus, "corpus '" + corpus.name + "' has no items");
  }
  ParseStats stats;
  stats.items = corpus.items.size();
  stats.ram_limit_gb = corpus.ram_limit_gb;

  std::size_t parsed = 0, shorts = 0, fragments = 0, over_limit = 0;
  std::uint64_t tokens = 0;
  MeanAccumulator cpu, mem;
  for (const ItemRecord& item : corpus.items) {
    tokens += item.token_count;
    if (item.token_count <= 15) {
      ++shorts;
    }
    if (item.fragment) {
      ++fragments;
    }
    if (item.exceeded_limit) {
      ++over_limit;
    }
    if (item.effectively_parsed()) {
      ++parsed;
      if (item.cpu_seconds) {
        cpu.add(*item.cpu_seconds);
      }
      if (item.memory_gb) {
        mem.add(*item.memory_gb);
      }
    }
  }
  auto n = static_cast<double>(stats.items);
  stats.parsed_pct = 100.0 * static_cast<double>(parsed) / n;
  stats.mean_tokens = static_cast<double>(tokens) / n;
  stats.short_pct = 100.0 * static_cast<double>(shorts) / n;
  stats.fragment_pct = 100.0 * static_cast<double>(fragments) / n;
  stats.over_limit_pct = 100.0 * static_cast<double>(over_limit) / n;
  stats.mean_cpu = cpu.mean();
  stats.mean_mem = mem.mean();
  return stats;
}

LengthBinTable binned_costs(const Corpus& corpus) {
  if (corpus.items.empty()) {
    throw Error(ErrorKind::EmptyCorpus, "corpus '" + corpus.name + "' has no items");
  }
  LengthBinTable table;
  std::array<MeanAccumulator, 4> cpu, mem;
  for (std::size_t i = 0; i < 4; ++i) {
    table.bins[i].lo = static_cast<std::uint32_t>(31 + 5 * i);
    table.bins[i].hi = table.bins[i].lo + 4;
  }
  for (const ItemRecord& item : corpus.items) {
    if (!item.effectively_parsed() || item.token_count < 31 || item.token_count > 50) {
      continue;
    }
    std::size_t bin = (item.token_count - 31) / 5;
    ++table.bins[bin].count;
    if (item.cpu_seconds) {
      cpu[bin].add(*item.cpu_seconds);
    }
    if (item.memory_gb) {
      mem[bin].add(*item.memory_gb);
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    table.bins[i].mean_cpu = cpu[i].mean();
    table.bins[i].mean_mem = mem[i].mean();
  }
  return table;
}

std::string parse_stats_table(const std::vector<std::pair<std::string, ParseStats>>& rows) {
  std::size_t name_width = 20;
  for (const auto& [name, stats] : rows) {
    name_width = std::max(name_width, name.size());
  }
  std::ostringstream out;
  auto pad_name = [&](const std::string& name) {
    out << name << std::string(name_width - name.size(), ' ');
  };
  pad_name("Profile");
  out << "  Items  Parsed  Length  Short  Frgmt   Time  Space  >Limit\n";
  pad_name("");
  out << "             %  toks/S      %      %  sec/S   Gb/S       %\n";
  for (const auto& [name, stats] : rows) {
    pad_name(name);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%7zu", stats.items);
    out << buffer << fixed(stats.parsed_pct, 1, 8) << fixed(stats.mean_tokens, 2, 8)
        << fixed(stats.short_pct, 0, 7) << fixed(stats.fragment_pct, 0, 7)
        << cell(stats.mean_cpu, 1, 7) << cell(stats.mean_mem, 1, 7)
        << fixed(stats.over_limit_pct, 1, 8) << "\n";
  }
  return out.str();
}

std::string parse_stats_csv(const std::vector<std::pair<std::string, ParseStats>>& rows) {
  std::string out =
      "profile,items,parsed_pct,mean_tokens,short_pct,fragment_pct,mean_cpu,mean_mem,"
      "over_limit_pct,ram_limit_gb\n";
  for (const auto& [name, stats] : rows) {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer), "%s,%zu,%.6f,%.6f,%.6f,%.6f", name.c_str(),
                  stats.items, stats.parsed_pct, stats.mean_tokens, stats.short_pct,
                  stats.fragment_pct);
    out += buffer;
    append_csv_value(out, stats.mean_cpu);
    append_csv_value(out, stats.mean_mem);
    std::snprintf(buffer, sizeof(buffer), ",%.6f", stats.over_limit_pct);
    out += buffer;
    append_csv_value(out, stats.ram_limit_gb);
    out.push_back('\n');
  }
  return out;
}

std::string binned_costs_table(const std::vector<std::pair<std::string, LengthBinTable>>& rows) {
  std::size_t name_width = 20;
  for (const auto& [name, table] : rows) {
    name_width = std::max(name_width, name.size());
  }
  std::ostringstream out;
  auto pad_name = [&](const std::string& name) {
    out << name << std::string(name_width - name.size(), ' ');
  };
  pad_name("Profile");
  out << "  Time (CPU-seconds/sent)      Space (Gbytes/sent)\n";
  pad_name("(length in tokens)");
  out << "  31-35  36-40  41-45  46-50   31-35  36-40  41-45  46-50\n";
  for (const auto& [name, table] : rows) {
    pad_name(name);
    for (const LengthBin& bin : table.bins) {
      out << cell(bin.mean_cpu, 0, 7);
    }
    out << " ";
    for (const LengthBin& bin : table.bins) {
      out << cell(bin.mean_mem, 1, 7);
    }
    out << "\n";
  }
  return out.str();
}

std::string binned_costs_csv(const std::vector<std::pair<std::string, LengthBinTable>>& rows) {
  std::string out = "profile,bin,count,mean_cpu,mean_mem\n";
  for (const auto& [name, table] : rows) {
    for (const LengthBin& bin : table.bins) {
      char buffer[128];
      std::snprintf(buffer, sizeof(buffer), "%s,%u-%u,%zu", name.c_str(), bin.lo, bin.hi,
                    bin.count);
      out += buffer;
      append_csv_value(out, bin.mean_cpu);
      append_csv_value(out, bin.mean_mem);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace syndiv
