#include "calex/report.hpp"

#include <sstream>

#include "calex/errors.hpp"

namespace calex {

ReportNode& ReportNode::add(const std::string& k, const std::string& v) {
    if (v.find('\n') != std::string::npos)
        throw Error("BadArgument", "report values must be single-line", EXIT_INTERNAL);
    children.emplace_back(k, v);
    return children.back();
}

ReportNode& ReportNode::add_section(const std::string& k) {
    children.emplace_back(k);
    return children.back();
}

void ReportNode::add_lines(const std::string& k, const std::string& multiline) {
    ReportNode& sec = add_section(k);
    std::istringstream in(multiline);
    std::string line;
    while (std::getline(in, line)) sec.add("line", line);
}

const ReportNode* ReportNode::find(const std::string& k) const {
    for (const ReportNode& c : children)
        if (c.key == k) return &c;
    return nullptr;
}

namespace {

void render(const ReportNode& node, int depth, std::string& out) {
    out.append(static_cast<size_t>(2 * depth), ' ');
    out += node.key;
    if (node.children.empty()) {
        out += ":";
        if (!node.value.empty()) {
            out += " ";
            out += node.value;
        }
    } else if (!node.value.empty()) {
        out += ": ";
        out += node.value;
    }
    out += "\n";
    for (const ReportNode& c : node.children) render(c, depth + 1, out);
}

}  // namespace

std::string render_machine(const ReportNode& root) {
    std::string out;
    render(root, 0, out);
    return out;
}

std::string render_text(const ReportNode& root, double elapsed_ms) {
    std::string out = render_machine(root);
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << elapsed_ms;
    out += "elapsed-ms: " + t.str() + "\n";
    return out;
}

}  // namespace calex
