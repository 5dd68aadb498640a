#include "otkit/page_xml.h"

#include <charconv>
#include <optional>
#include <set>

#include <expat.h>

#include "otkit/error.h"
#include "otkit/file_io.h"

namespace otkit {
namespace {

constexpr std::string_view kPageNsPrefix =
    "http://schema.primaresearch.org/PAGE/gts/pagecontent/";
constexpr char kNsSep = '|';

bool SupportedNamespace(std::string_view ns) {
  if (!ns.starts_with(kPageNsPrefix)) return false;
  std::string_view date = ns.substr(kPageNsPrefix.size());
  int year = 0;
  auto [ptr, ec] = std::from_chars(date.data(), date.data() + date.size(), year);
  return ec == std::errc() && ptr == date.data() + 4 && year >= 2013;
}

std::string XmlEscape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      case '\r': out += "&#13;"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default: out += c;
    }
  }
  return out;
}

enum class Capture { kNone, kCreator, kCreated, kLastChange, kUnicode };

class PageParser {
 public:
  explicit PageParser(std::vector<std::string> *warnings)
      : warnings_(warnings) {}

  PageDocument Parse(std::string_view bytes) {
    XML_Parser parser = XML_ParserCreateNS(nullptr, kNsSep);
    if (parser == nullptr) throw Error(ErrorCode::kIo, "cannot create XML parser");
    parser_ = parser;
    XML_SetUserData(parser, this);
    XML_SetElementHandler(parser, &PageParser::OnStart, &PageParser::OnEnd);
    XML_SetCharacterDataHandler(parser, &PageParser::OnText);
    XML_Status status = XML_Parse(parser, bytes.data(),
                                  static_cast<int>(bytes.size()), XML_TRUE);
    std::string xml_error;
    if (status != XML_STATUS_OK && !error_) {
      xml_error = std::string(XML_ErrorString(XML_GetErrorCode(parser))) +
                  " at line " + std::to_string(XML_GetCurrentLineNumber(parser)) +
                  ", column " +
                  std::to_string(XML_GetCurrentColumnNumber(parser));
    }
    XML_ParserFree(parser);
    if (error_) throw *error_;
    if (!xml_error.empty()) throw Error(ErrorCode::kMalformedXml, xml_error);
    if (!saw_root_) throw Error(ErrorCode::kMalformedXml, "no root element");
    if (warnings_) {
      for (const auto &name : dropped_order_)
        warnings_->push_back("dropped unsupported PAGE element <" + name + ">");
    }
    return std::move(doc_);
  }

 private:
  static void OnStart(void *self, const XML_Char *name, const XML_Char **attrs) {
    static_cast<PageParser *>(self)->Start(name, attrs);
  }
  static void OnEnd(void *self, const XML_Char *name) {
    static_cast<PageParser *>(self)->End(name);
  }
  static void OnText(void *self, const XML_Char *s, int len) {
    static_cast<PageParser *>(self)->Text(std::string_view(s, len));
  }

  void Fail(ErrorCode code, const std::string &message) {
    if (!error_) {
      error_ = Error(code, message + " at line " +
                               std::to_string(XML_GetCurrentLineNumber(parser_)));
    }
    XML_StopParser(parser_, XML_FALSE);
  }

  void Drop(const std::string &local, bool warn) {
    ++skip_depth_;
    if (warn && dropped_.insert(local).second) dropped_order_.push_back(local);
  }

  static std::string Attr(const XML_Char **attrs, std::string_view key) {
    for (int i = 0; attrs[i] != nullptr; i += 2)
      if (key == attrs[i]) return attrs[i + 1];
    return {};
  }

  std::vector<Point> Points(const XML_Char **attrs) {
    try {
      return ParsePoints(Attr(attrs, "points"));
    } catch (const Error &e) {
      Fail(e.code(), e.what());
      return {};
    }
  }

  std::int64_t Integer(const XML_Char **attrs, std::string_view key) {
    std::string v = Attr(attrs, key);
    if (v.empty()) return 0;
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      Fail(ErrorCode::kMalformedXml,
           "attribute " + std::string(key) + "=\"" + v + "\" is not an integer");
    return out;
  }

  void CheckId(const std::string &id) {
    if (!id.empty() && !ids_.insert(id).second)
      Fail(ErrorCode::kMalformedXml, "duplicate id '" + id + "'");
  }

  void Start(const XML_Char *raw_name, const XML_Char **attrs) {
    if (error_) return;
    std::string_view name(raw_name);
    std::size_t sep = name.rfind(kNsSep);
    std::string ns(sep == std::string_view::npos ? std::string_view()
                                                 : name.substr(0, sep));
    std::string local(sep == std::string_view::npos ? name
                                                    : name.substr(sep + 1));
    if (skip_depth_ > 0) {
      ++skip_depth_;
      return;
    }
    if (!saw_root_) {
      saw_root_ = true;
      if (local != "PcGts" || !SupportedNamespace(ns)) {
        Fail(ErrorCode::kUnsupportedSchema,
             "root element is not a PAGE 2013+ PcGts (got '" + std::string(name) +
                 "')");
        return;
      }
      page_ns_ = ns;
      doc_.page_id = Attr(attrs, "pcGtsId");
      stack_.push_back(local);
      return;
    }
    if (ns != page_ns_) {
      Drop(std::string(name), true);
      return;
    }
    const std::string &parent = stack_.back();
    if (parent == "PcGts") {
      if (local == "Metadata" || local == "Page") {
        if (local == "Page") {
          doc_.image_filename = Attr(attrs, "imageFilename");
          doc_.image_width = Integer(attrs, "imageWidth");
          doc_.image_height = Integer(attrs, "imageHeight");
        }
        stack_.push_back(local);
      } else {
        Drop(local, true);
      }
    } else if (parent == "Metadata") {
      if (local == "Creator") capture_ = Capture::kCreator;
      else if (local == "Created") capture_ = Capture::kCreated;
      else if (local == "LastChange") capture_ = Capture::kLastChange;
      else {
        Drop(local, false);
        return;
      }
      text_.clear();
      stack_.push_back(local);
    } else if (parent == "Page") {
      if (local == "TextRegion") {
        PageRegion region;
        region.id = Attr(attrs, "id");
        CheckId(region.id);
        doc_.regions.push_back(std::move(region));
        stack_.push_back(local);
      } else {
        Drop(local, true);
      }
    } else if (parent == "TextRegion") {
      PageRegion &region = doc_.regions.back();
      if (local == "Coords") {
        region.coords = Points(attrs);
        Drop(local, false);
      } else if (local == "TextLine") {
        PageLine line;
        line.id = Attr(attrs, "id");
        CheckId(line.id);
        region.lines.push_back(std::move(line));
        line_has_text_ = false;
        stack_.push_back(local);
      } else {
        // Region-level TextEquiv duplicates the line texts.
        Drop(local, local != "TextEquiv");
      }
    } else if (parent == "TextLine") {
      PageLine &line = doc_.regions.back().lines.back();
      if (local == "Coords") {
        line.coords = Points(attrs);
        Drop(local, false);
      } else if (local == "Baseline") {
        line.baseline = Points(attrs);
        Drop(local, false);
      } else if (local == "TextEquiv" && !line_has_text_) {
        line_has_text_ = true;
        stack_.push_back(local);
      } else {
        Drop(local, local != "TextEquiv");
      }
    } else if (parent == "TextEquiv") {
      if (local == "Unicode") {
        capture_ = Capture::kUnicode;
        text_.clear();
        stack_.push_back(local);
      } else {
        Drop(local, local != "PlainText");
      }
    } else {
      Drop(local, true);
    }
  }

  void End(const XML_Char *) {
    if (error_) return;
    if (skip_depth_ > 0) {
      --skip_depth_;
      return;
    }
    if (capture_ != Capture::kNone) {
      switch (capture_) {
        case Capture::kCreator: doc_.creator = text_; break;
        case Capture::kCreated: doc_.created = text_; break;
        case Capture::kLastChange: doc_.last_change = text_; break;
        case Capture::kUnicode: doc_.regions.back().lines.back().text = text_; break;
        case Capture::kNone: break;
      }
      capture_ = Capture::kNone;
    }
    if (!stack_.empty()) stack_.pop_back();
  }

  void Text(std::string_view s) {
    if (capture_ != Capture::kNone && skip_depth_ == 0) text_.append(s);
  }

  XML_Parser parser_ = nullptr;
  std::vector<std::string> *warnings_;
  std::optional<Error> error_;
  PageDocument doc_;
  std::string page_ns_;
  std::vector<std::string> stack_;
  int skip_depth_ = 0;
  bool saw_root_ = false;
  bool line_has_text_ = false;
  Capture capture_ = Capture::kNone;
  std::string text_;
  std::set<std::string> ids_;
  std::set<std::string> dropped_;
  std::vector<std::string> dropped_order_;
};

}  // namespace

std::size_t PageDocument::LineCount() const {
  std::size_t n = 0;
  for (const auto &r : regions) n += r.lines.size();
  return n;
}

std::vector<std::string> PageDocument::LineTexts() const {
  std::vector<std::string> out;
  for (const auto &r : regions)
    for (const auto &l : r.lines) out.push_back(l.text);
  return out;
}

std::vector<Point> ParsePoints(std::string_view text) {
  std::vector<Point> points;
  std::size_t pos = 0;
  auto bad = [&](std::string_view token) {
    return Error(ErrorCode::kMalformedXml,
                 "bad point '" + std::string(token) + "' in points list");
  };
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find_first_of(" \t\n\r", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    std::size_t comma = token.find(',');
    if (comma == std::string_view::npos) throw bad(token);
    Point p;
    auto rx = std::from_chars(token.data(), token.data() + comma, p.x);
    auto ry = std::from_chars(token.data() + comma + 1,
                              token.data() + token.size(), p.y);
    if (rx.ec != std::errc() || rx.ptr != token.data() + comma ||
        ry.ec != std::errc() || ry.ptr != token.data() + token.size())
      throw bad(token);
    points.push_back(p);
    pos = end;
  }
  return points;
}

std::string FormatPoints(const std::vector<Point> &points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(points[i].x) + ',' + std::to_string(points[i].y);
  }
  return out;
}

PageDocument ParsePageXml(std::string_view bytes,
                          std::vector<std::string> *warnings) {
  return PageParser(warnings).Parse(bytes);
}

PageDocument LoadPageXml(const std::filesystem::path &path,
                         std::vector<std::string> *warnings) {
  try {
    return ParsePageXml(ReadFile(path), warnings);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string WritePageXml(const PageDocument &doc) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  out += "<PcGts xmlns=\"" + std::string(kPageNamespace2013) + "\"";
  if (!doc.page_id.empty())
    out += " pcGtsId=\"" + XmlEscape(doc.page_id, true) + "\"";
  out += ">\n";
  out += "  <Metadata>\n";
  out += "    <Creator>" + XmlEscape(doc.creator, false) + "</Creator>\n";
  out += "    <Created>" + XmlEscape(doc.created, false) + "</Created>\n";
  out += "    <LastChange>" + XmlEscape(doc.last_change, false) +
         "</LastChange>\n";
  out += "  </Metadata>\n";
  out += "  <Page imageFilename=\"" + XmlEscape(doc.image_filename, true) +
         "\" imageWidth=\"" + std::to_string(doc.image_width) +
         "\" imageHeight=\"" + std::to_string(doc.image_height) + "\"";
  if (doc.regions.empty()) {
    out += "/>\n";
  } else {
    out += ">\n";
    for (const PageRegion &region : doc.regions) {
      out += "    <TextRegion id=\"" + XmlEscape(region.id, true) + "\">\n";
      if (!region.coords.empty())
        out += "      <Coords points=\"" + FormatPoints(region.coords) + "\"/>\n";
      for (const PageLine &line : region.lines) {
        out += "      <TextLine id=\"" + XmlEscape(line.id, true) + "\">\n";
        if (!line.coords.empty())
          out += "        <Coords points=\"" + FormatPoints(line.coords) + "\"/>\n";
        if (!line.baseline.empty())
          out += "        <Baseline points=\"" + FormatPoints(line.baseline) +
                 "\"/>\n";
        out += "        <TextEquiv>\n          <Unicode>" +
               XmlEscape(line.text, false) +
               "</Unicode>\n        </TextEquiv>\n";
        out += "      </TextLine>\n";
      }
      out += "    </TextRegion>\n";
    }
    out += "  </Page>\n";
  }
  out += "</PcGts>\n";
  return out;
}

}  // namespace otkit
