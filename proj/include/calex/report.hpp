#ifndef CALEX_REPORT_HPP
#define CALEX_REPORT_HPP

#include <string>
#include <vector>

namespace calex {

/// Ordered key/value tree. Leaves render as "key: value", sections as a bare
/// key with indented children. Values never contain newlines; multi-line
/// payloads (presentations) become repeated "line" leaves.
struct ReportNode {
    std::string key;
    std::string value;
    std::vector<ReportNode> children;

    ReportNode() = default;
    explicit ReportNode(std::string k, std::string v = "")
        : key(std::move(k)), value(std::move(v)) {}

    ReportNode& add(const std::string& k, const std::string& v);
    ReportNode& add_section(const std::string& k);
    void add_lines(const std::string& k, const std::string& multiline);

    const ReportNode* find(const std::string& k) const;
};

/// Stable machine rendering; bit-exact across runs for identical inputs.
std::string render_machine(const ReportNode& root);

/// Human rendering: same tree plus a timing trailer.
std::string render_text(const ReportNode& root, double elapsed_ms);

enum class ReportFormat { Text, Tree };

}  // namespace calex

#endif
