// PAGE-XML (2013 and later namespaces), restricted to the elements a
// ground-truth workflow touches: Metadata timestamps, Page, TextRegion,
// TextLine, Coords, Baseline and TextEquiv/Unicode. Anything else is dropped
// on read with a warning.

#ifndef OTKIT_PAGE_XML_H_
#define OTKIT_PAGE_XML_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace otkit {

inline constexpr std::string_view kPageNamespace2013 =
    "http://schema.primaresearch.org/PAGE/gts/pagecontent/2013-07-15";

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const Point &) const = default;
};

struct PageLine {
  std::string id;
  std::vector<Point> coords;
  std::vector<Point> baseline;
  std::string text;  // empty when the line has no TextEquiv

  bool operator==(const PageLine &) const = default;
};

struct PageRegion {
  std::string id;
  std::vector<Point> coords;
  std::vector<PageLine> lines;

  bool operator==(const PageRegion &) const = default;
};

struct PageDocument {
  std::string page_id;  // PcGts/@pcGtsId
  std::string creator = "otkit";
  std::string created = "1970-01-01T00:00:00";
  std::string last_change = "1970-01-01T00:00:00";
  std::string image_filename;
  std::int64_t image_width = 0;
  std::int64_t image_height = 0;
  std::vector<PageRegion> regions;  // reading order as in the source

  std::size_t LineCount() const;
  // Texts of all lines in reading order.
  std::vector<std::string> LineTexts() const;

  bool operator==(const PageDocument &) const = default;
};

// Throws MalformedXml for ill-formed input, duplicate ids or bad point
// lists, UnsupportedSchema for a non-PAGE root or pre-2013 namespace.
PageDocument ParsePageXml(std::string_view bytes,
                          std::vector<std::string> *warnings = nullptr);
PageDocument LoadPageXml(const std::filesystem::path &path,
                         std::vector<std::string> *warnings = nullptr);

// Serializes in the 2013-07-15 namespace. Output depends only on `doc`;
// timestamps default to the Unix epoch.
std::string WritePageXml(const PageDocument &doc);

std::string FormatPoints(const std::vector<Point> &points);
// Throws MalformedXml.
std::vector<Point> ParsePoints(std::string_view text);

}  // namespace otkit

#endif  // OTKIT_PAGE_XML_H_
