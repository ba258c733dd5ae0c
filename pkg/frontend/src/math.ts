/**
 * Math typesetting. The engine's TeX strings are inserted verbatim inside
 * MathJax delimiters; when MathJax is present (loaded from the page shell)
 * it typesets them, otherwise the raw TeX stays readable.
 */

import { el } from "./dom";
import type { DerivationDocument, DocumentStep } from "./types";

declare global {
  interface Window {
    MathJax?: { typesetPromise?: (nodes?: HTMLElement[]) => Promise<void> };
  }
}

export function mathBlock(tex: string): HTMLElement {
  return el("div", { className: "math-block" }, `\\[ ${tex} \\]`);
}

export function stepNode(step: DocumentStep): HTMLElement {
  if (step.kind === "text") {
    return el("p", { className: "step-text" }, step.display);
  }
  return mathBlock(step.display);
}

export function documentNode(doc: DerivationDocument, numbered = false): HTMLElement {
  const root = el("div", { className: "derivation" });
  for (const section of doc.sections) {
    const sectionNode = el("section", { className: "doc-section" },
      el("h3", {}, section.title));
    const many = numbered && section.steps.length > 1;
    section.steps.forEach((step, index) => {
      const node = stepNode(step);
      if (many) {
        node.prepend(el("span", { className: "step-number" }, `${index + 1}. `));
      }
      sectionNode.append(node);
    });
    root.append(sectionNode);
  }
  return root;
}

export function typeset(root: HTMLElement): Promise<void> {
  const mj = window.MathJax;
  if (mj && typeof mj.typesetPromise === "function") {
    return mj.typesetPromise([root]).catch(() => undefined);
  }
  return Promise.resolve();
}
