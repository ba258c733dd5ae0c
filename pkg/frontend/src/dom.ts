/** Small DOM helpers; no framework, just typed element builders. */

type Attrs = Record<string, string | number | boolean | EventListener>;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key.startsWith("on") && typeof value === "function") {
      node.addEventListener(key.slice(2), value as EventListener);
    } else if (key === "className") {
      node.className = String(value);
    } else if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
    } else {
      node.setAttribute(key, String(value));
    }
  }
  node.append(...children);
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function labeled(text: string, control: HTMLElement): HTMLLabelElement {
  return el("label", { className: "field" }, el("span", {}, text), control);
}

/** Mark the input whose data-field matches an ApiError field, if any. */
export function showFieldError(
  root: HTMLElement,
  field: string | null,
  message: string,
): void {
  const box = root.querySelector<HTMLElement>(".error-box");
  if (box) {
    box.textContent = message;
    box.hidden = false;
  }
  root.querySelectorAll<HTMLElement>(".input-error").forEach((node) => {
    node.classList.remove("input-error");
  });
  if (field) {
    const target = root.querySelector<HTMLElement>(`[data-field="${field}"]`);
    if (target) target.classList.add("input-error");
  }
}

export function clearErrors(root: HTMLElement): void {
  const box = root.querySelector<HTMLElement>(".error-box");
  if (box) {
    box.hidden = true;
    box.textContent = "";
  }
  root.querySelectorAll<HTMLElement>(".input-error").forEach((node) => {
    node.classList.remove("input-error");
  });
}
