// Judgment grid view data: one control per unordered sibling pair at a
// node, plus the node's consistency badge from the latest analysis.
import { badgeColor, pct } from "./format.js";
import { nodeAt, orientedValue, pairMembers } from "./model.js";
export function badgeFor(analysis, path) {
    if (!analysis)
        return null;
    const key = path.join("/");
    const row = analysis.rows.find((r) => r.path.join("/") === key);
    if (!row)
        return null;
    return {
        text: pct(row.consistency.consistency_ratio),
        color: badgeColor(row.consistency.status),
    };
}
export function buildGrid(model, analysis, path) {
    const node = nodeAt(model, path);
    const members = pairMembers(model, node);
    const pairs = [];
    for (let i = 0; i < members.length; i++) {
        for (let j = i + 1; j < members.length; j++) {
            const left = members[i];
            const right = members[j];
            const stored = node.judgments
                .map((judgment) => orientedValue(judgment, left, right))
                .find((v) => v !== null);
            pairs.push({ left, right, ratio: stored ?? null });
        }
    }
    return {
        path,
        title: node.name,
        members,
        comparesAlternatives: node.children === "alternatives",
        pairs,
        badge: badgeFor(analysis, path),
    };
}
