#include "suffixient/naive_tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "suffixient/errors.hpp"

namespace suffixient {

namespace {

bool starts_with(const Label& s, const Label& prefix) {
  return s.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

}  // namespace

std::string label_to_string(const Label& label) {
  std::string out;
  for (auto c : label) {
    if (c >= 0x21 && c < 0x7f) {
      out.push_back(static_cast<char>(c));
    } else {
      out += "<" + std::to_string(c) + ">";
    }
  }
  return out.empty() ? "<eps>" : out;
}

NaiveTree naive_builder(const TextBuffer& buffer, std::size_t max_length) {
  const std::size_t n = buffer.size();
  if (n > max_length) throw SizeError("naive builder input too long");
  Label text(n);
  for (std::size_t k = 0; k < n; ++k) text[k] = buffer.arrival(n - 1 - k);

  std::map<Label, std::set<LetterCode>> followers;  // every non-empty substring
  std::set<LetterCode> letters(text.begin(), text.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto& f = followers[Label(text.begin() + i, text.begin() + j)];
      if (j < n) f.insert(text[j]);
    }
  }
  std::set<Label> node_labels{Label{}};
  for (std::size_t i = 0; i < n; ++i) node_labels.insert(Label(text.begin() + i, text.end()));
  for (const auto& [s, f] : followers) {
    if (f.size() >= 2) node_labels.insert(s);
  }

  NaiveTree out;
  for (const auto& u : node_labels) {
    CanonicalNode node;
    node.depth = static_cast<std::int64_t>(u.size());
    if (!u.empty()) {
      for (std::size_t len = u.size(); len-- > 0;) {
        Label p(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len));
        if (node_labels.contains(p)) {
          node.parent = p;
          break;
        }
      }
      std::int64_t anchor = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (starts_with(Label(text.begin() + i, text.end()), u)) {
          anchor = static_cast<std::int64_t>(n - i);
        }
      }
      node.rec_pos = buffer.direction() == Direction::kRightToLeft
                         ? Coord::from_right(node.depth - anchor)
                         : Coord::from_left(anchor);
    }
    out.nodes.emplace(u, std::move(node));
  }
  for (const auto& [u, node] : out.nodes) {
    if (node.parent) out.nodes[*node.parent].children.emplace(u[node.parent->size()], u);
  }
  for (const auto& u : node_labels) {
    for (auto x : letters) {
      Label xu{x};
      xu.insert(xu.end(), u.begin(), u.end());
      if (!followers.contains(xu)) continue;
      WLink link;
      if (node_labels.contains(xu)) {
        link = {xu, true};
        out.nodes[u].hard_links.emplace(x, xu);
      } else {
        Label best;
        bool found = false;
        for (const auto& v : node_labels) {
          if (starts_with(v, xu) && (!found || v.size() < best.size())) {
            best = v;
            found = true;
          }
        }
        if (!found) throw InvariantViolation("substring without a node below its locus");
        link = {best, false};
      }
      out.links[u].emplace(x, std::move(link));
    }
  }
  return out;
}

CanonicalTree canonical_form(const WeinerTree& tree) {
  CanonicalTree out;
  std::vector<Label> labels(tree.node_count());
  for (std::uint32_t id = 0; id < tree.node_count(); ++id) labels[id] = tree.label(NodeId{id});
  for (std::uint32_t id = 0; id < tree.node_count(); ++id) {
    const auto& st = tree.node(NodeId{id});
    CanonicalNode node;
    node.depth = st.depth;
    if (id != tree.root().value) {
      node.parent = labels[st.parent.value];
      node.rec_pos = st.rec_pos;
    }
    for (const auto& [c, child] : st.children) node.children.emplace(c, labels[child.value]);
    for (const auto& [c, dest] : st.hard_links) node.hard_links.emplace(c, labels[dest.value]);
    if (!out.emplace(labels[id], std::move(node)).second) {
      return {{Label{}, CanonicalNode{-1, {}, {}, {}, {}}}};  // duplicate label: never equal
    }
  }
  return out;
}

std::string describe_difference(const CanonicalTree& expected, const CanonicalTree& actual) {
  std::ostringstream os;
  for (const auto& [label, node] : expected) {
    auto it = actual.find(label);
    if (it == actual.end()) {
      os << "missing node " << label_to_string(label);
      return os.str();
    }
    const auto& got = it->second;
    if (got.depth != node.depth) os << "depth of " << label_to_string(label);
    else if (got.parent != node.parent) os << "parent of " << label_to_string(label);
    else if (got.children != node.children) os << "children of " << label_to_string(label);
    else if (got.rec_pos != node.rec_pos) {
      os << "recorded position of " << label_to_string(label) << ": expected "
         << node.rec_pos->value << ", got " << (got.rec_pos ? got.rec_pos->value : 0);
    } else if (got.hard_links != node.hard_links) {
      os << "hard links of " << label_to_string(label) << ": expected " << node.hard_links.size()
         << ", got " << got.hard_links.size();
    }
    if (!os.str().empty()) return os.str();
  }
  for (const auto& [label, node] : actual) {
    if (!expected.contains(label)) return "unexpected node " + label_to_string(label);
  }
  return {};
}

}  // namespace suffixient
