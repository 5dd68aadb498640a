#include "otkit/ingest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <system_error>

#include <json.hpp>

#include "otkit/error.h"
#include "otkit/file_io.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using nlohmann::json;

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

[[noreturn]] void BadManifest(const std::string &what) {
  throw Error(ErrorCode::kMalformedData, "manifest: " + what);
}

std::string StringField(const json &obj, const char *key, bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) BadManifest(std::string("missing \"") + key + "\"");
    return {};
  }
  if (!it->is_string()) BadManifest(std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

SplitLabel ParseSplitLabel(const std::string &s) {
  if (s == "train") return SplitLabel::kTrain;
  if (s == "val") return SplitLabel::kVal;
  if (s == "test") return SplitLabel::kTest;
  BadManifest("unknown split label \"" + s + "\"");
}

}  // namespace

std::vector<std::vector<std::string>> ParseTranscript(std::string_view text) {
  std::vector<std::vector<std::string>> regions;
  bool open = false;
  for (std::string &line : SplitLines(text)) {
    if (IsBlank(line)) {
      open = false;
      continue;
    }
    if (!open) regions.emplace_back();
    open = true;
    regions.back().push_back(std::move(line));
  }
  return regions;
}

std::vector<std::string> TranscriptLines(std::string_view text) {
  std::vector<std::string> out;
  for (auto &region : ParseTranscript(text))
    for (auto &line : region) out.push_back(std::move(line));
  return out;
}

std::vector<PairedLine> PairGroundTruth(const PageDocument &doc,
                                        std::span<const std::string> transcript,
                                        const GroundTruthPolicy &policy) {
  if (doc.LineCount() != transcript.size())
    throw LineCountMismatch(doc.LineCount(), transcript.size());
  std::vector<PairedLine> pairs;
  pairs.reserve(transcript.size());
  std::size_t k = 0;
  for (const PageRegion &region : doc.regions) {
    for (const PageLine &line : region.lines) {
      std::string text = Nfc(transcript[k++]);
      if (!policy.preserve_errors && policy.correction)
        text = Nfc(policy.correction(text));
      pairs.push_back({region.id, line.id, line.baseline, std::move(text)});
    }
  }
  return pairs;
}

PageDocument ApplyPairs(PageDocument doc, std::span<const PairedLine> pairs) {
  std::size_t k = 0;
  for (PageRegion &region : doc.regions) {
    for (PageLine &line : region.lines) {
      if (k >= pairs.size()) return doc;
      line.text = pairs[k++].text;
    }
  }
  return doc;
}

std::string FormatTrainingText(std::span<const PairedLine> pairs, bool reverse,
                               const ReversalOptions &opts) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].region_id != pairs[i - 1].region_id) out += '\n';
    out += reverse ? ReverseLine(pairs[i].text, opts) : pairs[i].text;
    out += '\n';
  }
  return out;
}

ExportedFiles ExportTrainingPairs(std::span<const PairedLine> pairs,
                                  bool reverse,
                                  const std::filesystem::path &out_dir,
                                  std::string_view basename,
                                  const PageDocument *page,
                                  const ReversalOptions &opts) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw Error(ErrorCode::kIo,
                "cannot create " + out_dir.string() + ": " + ec.message());

  ExportedFiles files;
  files.transcript = out_dir / (std::string(basename) + ".txt");
  WriteFile(files.transcript, FormatTrainingText(pairs, reverse, opts));
  if (page != nullptr) {
    std::vector<PairedLine> exported(pairs.begin(), pairs.end());
    if (reverse)
      for (PairedLine &p : exported) p.text = ReverseLine(p.text, opts);
    files.page_xml = out_dir / (std::string(basename) + ".xml");
    WriteFile(*files.page_xml, WritePageXml(ApplyPairs(*page, exported)));
  }
  return files;
}

std::string_view SplitLabelName(SplitLabel label) {
  switch (label) {
    case SplitLabel::kTrain: return "train";
    case SplitLabel::kVal: return "val";
    case SplitLabel::kTest: return "test";
  }
  return "train";
}

CorpusManifest ParseManifest(std::string_view json_text,
                             const std::filesystem::path &base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    BadManifest(e.what());
  }
  if (!root.is_object()) BadManifest("top level must be an object");
  if (root.contains("format") && root["format"] != "otkit-manifest")
    BadManifest("unexpected format");
  if (root.contains("version") && root["version"] != 1)
    BadManifest("unsupported version");

  CorpusManifest manifest;
  manifest.base_dir = base_dir;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) BadManifest("\"seed\" must be a non-negative integer");
    manifest.seed = root["seed"].get<std::uint64_t>();
  }
  auto entries = root.find("entries");
  if (entries == root.end() || !entries->is_array())
    BadManifest("\"entries\" must be an array");
  for (const json &e : *entries) {
    if (!e.is_object()) BadManifest("entry must be an object");
    ManifestEntry entry;
    entry.page = StringField(e, "page", true);
    entry.transcript = StringField(e, "transcript", true);
    std::string scheme = StringField(e, "scheme", false);
    if (!scheme.empty()) entry.scheme = SchemeId::Parse(scheme);
    if (auto meta = e.find("meta"); meta != e.end()) {
      if (!meta->is_object()) BadManifest("\"meta\" must be an object");
      entry.meta.name = StringField(*meta, "name", false);
      entry.meta.subject = StringField(*meta, "subject", false);
      entry.meta.date = StringField(*meta, "date", false);
    }
    if (entry.meta.name.empty())
      entry.meta.name = std::filesystem::path(entry.page).stem().string();
    std::string split = StringField(e, "split", false);
    if (!split.empty()) entry.split = ParseSplitLabel(split);
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest LoadManifest(const std::filesystem::path &path) {
  CorpusManifest manifest = ParseManifest(ReadFile(path), path.parent_path());
  for (const ManifestEntry &e : manifest.entries) {
    for (const std::string *rel : {&e.page, &e.transcript}) {
      std::filesystem::path p = manifest.Resolve(*rel);
      if (!std::filesystem::is_regular_file(p))
        throw Error(ErrorCode::kIo, "manifest entry file not found: " + p.string());
    }
  }
  return manifest;
}

std::string ManifestToJson(const CorpusManifest &manifest) {
  json root = json::object();
  root["format"] = "otkit-manifest";
  root["version"] = 1;
  if (manifest.seed) root["seed"] = *manifest.seed;
  json entries = json::array();
  for (const ManifestEntry &e : manifest.entries) {
    json entry = json::object();
    entry["page"] = e.page;
    entry["transcript"] = e.transcript;
    entry["scheme"] = e.scheme.name();
    entry["meta"] = {{"name", e.meta.name},
                     {"subject", e.meta.subject},
                     {"date", e.meta.date}};
    if (e.split) entry["split"] = std::string(SplitLabelName(*e.split));
    entries.push_back(std::move(entry));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

std::vector<std::size_t> SeededPermutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 engine(seed);
  for (std::size_t i = n; i > 1; --i) {
    // Unbiased draw from [0, i): reject the low 2^64 mod i outputs.
    const std::uint64_t range = i;
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t r;
    do {
      r = engine();
    } while (r < threshold);
    std::swap(perm[i - 1], perm[r % range]);
  }
  return perm;
}

CorpusManifest SplitCorpus(CorpusManifest manifest, const SplitRatios &ratios,
                           std::uint64_t seed) {
  if (manifest.entries.empty())
    throw Error(ErrorCode::kEmptyManifest, "manifest has no entries");
  const std::array<double, 3> r = {ratios.train, ratios.val, ratios.test};
  for (double x : r) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw Error(ErrorCode::kInvalidArgument, "split ratios must be positive");
  }
  if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9)
    throw Error(ErrorCode::kInvalidArgument, "split ratios must sum to 1");

  const std::size_t n = manifest.entries.size();
  std::array<std::size_t, 3> count{};
  std::array<double, 3> frac{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = r[i] * static_cast<double>(n);
    count[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    frac[i] = exact - static_cast<double>(count[i]);
    assigned += count[i];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (frac[a] != frac[b]) return frac[a] > frac[b];
    return r[a] > r[b];
  });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++count[order[k % 3]];

  const std::vector<std::size_t> perm = SeededPermutation(n, seed);
  for (std::size_t k = 0; k < n; ++k) {
    SplitLabel label = k < count[0]              ? SplitLabel::kTrain
                       : k < count[0] + count[1] ? SplitLabel::kVal
                                                 : SplitLabel::kTest;
    manifest.entries[perm[k]].split = label;
  }
  manifest.seed = seed;
  return manifest;
}

}  // namespace otkit
