import { describe, expect, it } from "vitest";

import { applyJudgment, nodeAt, pairMembers, scaffoldDoc, treeEntries } from "../src/model.js";
import type { CatalogEntryDoc, ModelDoc } from "../src/types.js";

const MODEL: ModelDoc = {
  version: "2.0",
  metadata: { name: "Pick", description: "", author: "" },
  alternatives: [
    { name: "OLD", attributes: {} },
    { name: "NEW", attributes: {} },
  ],
  goal: {
    name: "Pick",
    judgments: [{ left: "Speed", right: "Tone", value: "3" }],
    children: [
      {
        name: "Speed",
        judgments: [{ left: "OLD", right: "NEW", value: "7" }],
        children: "alternatives",
      },
      {
        name: "Tone",
        judgments: [{ left: "OLD", right: "NEW", value: "1/5" }],
        children: "alternatives",
      },
    ],
  },
};

function entry(category: string, key: string): CatalogEntryDoc {
  return {
    usability_dimension: "EFFICIENCY",
    category,
    attribute: key,
    sources: [],
    key,
  };
}

describe("node addressing", () => {
  it("resolves paths from the goal", () => {
    expect(nodeAt(MODEL, ["Goal"]).name).toBe("Pick");
    expect(nodeAt(MODEL, ["Goal", "Speed"]).children).toBe("alternatives");
    expect(nodeAt(MODEL, ["Pick", "Tone"]).name).toBe("Tone");
  });

  it("throws on unknown segments", () => {
    expect(() => nodeAt(MODEL, ["Goal", "Nowhere"])).toThrow(/unknown node/);
    expect(() => nodeAt(MODEL, ["Elsewhere"])).toThrow(/start at the goal/);
  });

  it("lists tree entries depth-first", () => {
    expect(treeEntries(MODEL).map((e) => e.path.join("/"))).toEqual(
      ["Goal", "Goal/Speed", "Goal/Tone"]);
  });

  it("pairs range over siblings or alternatives", () => {
    expect(pairMembers(MODEL, MODEL.goal)).toEqual(["Speed", "Tone"]);
    expect(pairMembers(MODEL, nodeAt(MODEL, ["Goal", "Speed"]))).toEqual(["OLD", "NEW"]);
  });
});

describe("judgment edits", () => {
  it("replaces a judgment in its stored orientation", () => {
    const edited = applyJudgment(MODEL, ["Goal"], ["Speed", "Tone"], "5");
    expect(edited.goal.judgments[0].value).toBe("5");
    expect(MODEL.goal.judgments[0].value).toBe("3"); // original untouched
  });

  it("stores the reciprocal when the pair is reversed", () => {
    const edited = applyJudgment(MODEL, ["Goal"], ["Tone", "Speed"], "5");
    expect(edited.goal.judgments[0]).toEqual({ left: "Speed", right: "Tone", value: "1/5" });
  });

  it("edits deep leaves without touching siblings", () => {
    const edited = applyJudgment(MODEL, ["Goal", "Tone"], ["OLD", "NEW"], "1");
    expect(nodeAt(edited, ["Goal", "Tone"]).judgments[0].value).toBe("1");
    expect(nodeAt(edited, ["Goal", "Speed"])).toBe(nodeAt(MODEL, ["Goal", "Speed"]));
  });

  it("throws on unknown pairs", () => {
    expect(() => applyJudgment(MODEL, ["Goal"], ["Speed", "Nowhere"], "3"))
      .toThrow(/no judgment/);
  });
});

describe("scaffolding", () => {
  it("builds goal -> category -> attribute -> alternatives with unit judgments", () => {
    const doc = scaffoldDoc(
      [entry("Performance", "UnexpectedInput"), entry("Performance", "Escalation"),
       entry("Accessibility", "MeaningIntent")],
      ["OLD", "NEW"], "Review");
    expect(doc.goal.children).toHaveLength(2);
    const performance = nodeAt(doc, ["Goal", "Performance"]);
    expect(performance.children).toHaveLength(2);
    expect(performance.judgments).toEqual(
      [{ left: "UnexpectedInput", right: "Escalation", value: "1" }]);
    const leaf = nodeAt(doc, ["Goal", "Performance", "Escalation"]);
    expect(leaf.children).toBe("alternatives");
    expect(leaf.judgments).toEqual([{ left: "OLD", right: "NEW", value: "1" }]);
    expect(doc.metadata.description).toMatch(/placeholder/);
  });

  it("requires a selection and two alternatives", () => {
    expect(() => scaffoldDoc([], ["A", "B"], "x")).toThrow(/at least one/);
    expect(() => scaffoldDoc([entry("Affect", "Entertaining")], ["A"], "x"))
      .toThrow(/2 alternatives/);
  });
});
