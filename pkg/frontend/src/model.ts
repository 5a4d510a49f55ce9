// Pure helpers over the structured model document: addressing nodes,
// applying judgment edits immutably, and building scaffolds from catalog
// selections. No weight math happens here or anywhere else in the client.

import { invertRatio } from "./scale.js";
import type { CatalogEntryDoc, JudgmentDoc, ModelDoc, NodeDoc } from "./types.js";

export const GOAL_SEGMENT = "Goal";

export function nodeAt(model: ModelDoc, path: string[]): NodeDoc {
  if (path.length === 0 || (path[0] !== GOAL_SEGMENT && path[0] !== model.goal.name)) {
    throw new Error(`path must start at the goal: ${path.join("/")}`);
  }
  let node = model.goal;
  for (const segment of path.slice(1)) {
    if (node.children === "alternatives") {
      throw new Error(`${segment} is below a leaf criterion`);
    }
    const next = node.children.find((c) => c.name === segment);
    if (!next) throw new Error(`unknown node: ${path.join("/")}`);
    node = next;
  }
  return node;
}

export interface TreeEntry {
  path: string[];
  name: string;
  depth: number;
  isLeaf: boolean;
}

export function treeEntries(model: ModelDoc): TreeEntry[] {
  const out: TreeEntry[] = [];
  const walk = (node: NodeDoc, path: string[], depth: number) => {
    out.push({ path, name: node.name, depth, isLeaf: node.children === "alternatives" });
    if (node.children !== "alternatives") {
      for (const child of node.children) {
        walk(child, [...path, child.name], depth + 1);
      }
    }
  };
  walk(model.goal, [GOAL_SEGMENT], 0);
  return out;
}

// Names a node's judgments range over: sibling criteria for inner nodes,
// the model's alternatives for leaves.
export function pairMembers(model: ModelDoc, node: NodeDoc): string[] {
  if (node.children === "alternatives") {
    return model.alternatives.map((a) => a.name);
  }
  return node.children.map((c) => c.name);
}

export function orientedValue(j: JudgmentDoc, left: string, right: string): string | null {
  if (j.left === left && j.right === right) return j.value;
  if (j.left === right && j.right === left) return invertRatio(j.value);
  return null;
}

// New document with one judgment at `path` replaced; `ratio` is read in the
// orientation of (left, right) and stored in the judgment's own orientation.
export function applyJudgment(model: ModelDoc, path: string[],
                              pair: [string, string], ratio: string): ModelDoc {
  const [left, right] = pair;

  const rewrite = (node: NodeDoc, remaining: string[]): NodeDoc => {
    if (remaining.length === 0) {
      let found = false;
      const judgments = node.judgments.map((j) => {
        if (j.left === left && j.right === right) {
          found = true;
          return { ...j, value: ratio };
        }
        if (j.left === right && j.right === left) {
          found = true;
          return { ...j, value: invertRatio(ratio) };
        }
        return j;
      });
      if (!found) throw new Error(`no judgment for pair (${left}, ${right})`);
      return { ...node, judgments };
    }
    if (node.children === "alternatives") {
      throw new Error(`unknown node: ${path.join("/")}`);
    }
    const [head, ...rest] = remaining;
    const children = node.children.map((c) => (c.name === head ? rewrite(c, rest) : c));
    if (!children.some((c, i) => c !== node.children[i])) {
      throw new Error(`unknown node: ${path.join("/")}`);
    }
    return { ...node, children };
  };

  nodeAt(model, path); // throws on bad paths before any rewriting
  return { ...model, goal: rewrite(model.goal, path.slice(1)) };
}

function unitJudgments(names: string[]): JudgmentDoc[] {
  const out: JudgmentDoc[] = [];
  for (let i = 0; i < names.length; i++) {
    for (let j = i + 1; j < names.length; j++) {
      out.push({ left: names[i], right: names[j], value: "1" });
    }
  }
  return out;
}

// Goal -> category -> attribute -> alternatives skeleton from a catalog
// selection, every judgment at 1, flagged as placeholders.
export function scaffoldDoc(selection: CatalogEntryDoc[], alternatives: string[],
                            name: string): ModelDoc {
  if (selection.length === 0) throw new Error("select at least one attribute");
  if (alternatives.length < 2) throw new Error("need at least 2 alternatives");
  const altNames = alternatives.map((a) => a.trim()).filter((a) => a.length > 0);

  const byCategory = new Map<string, CatalogEntryDoc[]>();
  for (const entry of selection) {
    const bucket = byCategory.get(entry.category) ?? [];
    bucket.push(entry);
    byCategory.set(entry.category, bucket);
  }

  const categories: NodeDoc[] = [];
  for (const [category, entries] of byCategory) {
    const leaves: NodeDoc[] = entries.map((e) => ({
      name: e.key,
      judgments: unitJudgments(altNames),
      children: "alternatives",
    }));
    categories.push({
      name: category,
      judgments: unitJudgments(leaves.map((l) => l.name)),
      children: leaves,
    });
  }

  return {
    version: "2.0",
    metadata: {
      name,
      description: "Scaffolded model; all pairwise judgments are placeholders (1) "
        + "awaiting real assessments.",
      author: "",
    },
    alternatives: altNames.map((a) => ({ name: a, attributes: {} })),
    goal: {
      name,
      judgments: unitJudgments(categories.map((c) => c.name)),
      children: categories,
    },
  };
}
