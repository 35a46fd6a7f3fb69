#include "support.hpp"

#include <cctype>
#include <unistd.h>

namespace testing {

std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path()
                     / ("momark-test-" + std::to_string(::getpid()) + "-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

namespace {

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
}

std::string check_text(std::string_view text)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '<')
            return "raw '<' in text";
        if (text[i] != '&')
            continue;
        const std::size_t semi = text.find(';', i);
        if (semi == std::string_view::npos)
            return "unterminated entity";
        const std::string_view ent = text.substr(i + 1, semi - i - 1);
        if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos" && ent.rfind('#', 0) != 0)
            return "unknown entity &" + std::string(ent) + ";";
        i = semi;
    }
    return {};
}

} // namespace

std::string xml_problem(std::string_view s)
{
    std::vector<std::string> stack;
    int roots = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t lt = s.find('<', i);
        const std::string_view text = s.substr(i, lt == std::string_view::npos ? std::string_view::npos : lt - i);
        if (std::string e = check_text(text); !e.empty())
            return e;
        if (stack.empty() && text.find_first_not_of(" \t\r\n") != std::string_view::npos)
            return "text outside the root element";
        if (lt == std::string_view::npos)
            break;
        if (s.compare(lt, 5, "<?xml") == 0) {
            const std::size_t end = s.find("?>", lt);
            if (end == std::string_view::npos || lt != 0)
                return "bad XML declaration";
            i = end + 2;
            continue;
        }
        if (s.compare(lt, 4, "<!--") == 0) {
            const std::size_t end = s.find("-->", lt);
            if (end == std::string_view::npos)
                return "unterminated comment";
            i = end + 3;
            continue;
        }
        std::size_t p = lt + 1;
        const bool closing = p < s.size() && s[p] == '/';
        if (closing)
            ++p;
        const std::size_t name_start = p;
        while (p < s.size() && name_char(s[p]))
            ++p;
        const std::string name(s.substr(name_start, p - name_start));
        if (name.empty())
            return "empty tag name";
        bool self_closing = false;
        while (true) {
            while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p])))
                ++p;
            if (p >= s.size())
                return "unterminated tag <" + name;
            if (s[p] == '>') {
                ++p;
                break;
            }
            if (s[p] == '/' && p + 1 < s.size() && s[p + 1] == '>') {
                self_closing = true;
                p += 2;
                break;
            }
            if (closing)
                return "attributes on closing tag </" + name;
            const std::size_t attr_start = p;
            while (p < s.size() && name_char(s[p]))
                ++p;
            if (p == attr_start || p >= s.size() || s[p] != '=')
                return "malformed attribute in <" + name;
            ++p;
            if (p >= s.size() || (s[p] != '"' && s[p] != '\''))
                return "unquoted attribute in <" + name;
            const char q = s[p++];
            const std::size_t end = s.find(q, p);
            if (end == std::string_view::npos)
                return "unterminated attribute in <" + name;
            if (std::string e = check_text(s.substr(p, end - p)); !e.empty())
                return e + " in attribute of <" + name;
            p = end + 1;
        }
        if (closing) {
            if (stack.empty() || stack.back() != name)
                return "mismatched </" + name + ">";
            stack.pop_back();
        } else if (self_closing) {
            if (stack.empty())
                ++roots;
        } else {
            if (stack.empty())
                ++roots;
            stack.push_back(name);
        }
        i = p;
    }
    if (!stack.empty())
        return "unclosed <" + stack.back() + ">";
    if (roots != 1)
        return "expected one root element, found " + std::to_string(roots);
    return {};
}

} // namespace testing
