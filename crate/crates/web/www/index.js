import init, { path_demo, verify_on_family, tree_beta1 } from "./pkg/tmdim_web.js";

const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs, parent) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  parent.appendChild(e);
  return e;
}

function render(target, json) {
  const out = document.getElementById(target);
  out.replaceChildren();
  const view = JSON.parse(json);
  if (view.error) {
    const p = document.createElement("div");
    p.className = "error";
    p.textContent = view.error;
    out.appendChild(p);
    return;
  }
  const w = 940, h = 320, pad = 16;
  const svg = el("svg", { viewBox: `0 0 ${w} ${h}` }, out);
  const pos = view.vertices.map((v) => [pad + v.x * (w - 2 * pad), pad + v.y * (h - 2 * pad)]);
  for (const [u, v] of view.edges) {
    el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1] }, svg);
  }
  const r = view.vertices.length > 60 ? 4 : 8;
  for (const v of view.vertices) {
    const cls = v.landmark ? "landmark" : v.shared ? "shared" : "plain";
    const c = el("circle", { cx: pos[v.id][0], cy: pos[v.id][1], r, class: cls }, svg);
    el("title", {}, c).textContent = `${v.label}: (${v.vector.join(", ")})`;
    if (r > 4) el("text", { x: pos[v.id][0], y: pos[v.id][1] - r - 3 }, svg).textContent = v.label;
  }
  const lines = document.createElement("div");
  lines.className = "lines";
  const verdict = view.resolving ? "resolving" : "not resolving";
  lines.textContent = [`k = ${view.k}, ${view.landmarks.length} landmarks, ${verdict}`, ...view.lines].join("\n");
  out.appendChild(lines);
}

const num = (id) => Number(document.getElementById(id).value);

function drawPath() {
  render("path-out", path_demo(num("path-n"), num("path-k")));
}

function drawFamily() {
  const fam = document.getElementById("fam").value;
  const set = document.getElementById("fam-set").value;
  render("fam-out", verify_on_family(fam, num("fam-a"), num("fam-b"), num("fam-k"), set));
}

function drawTree() {
  render("tree-out", tree_beta1(document.getElementById("tree-text").value));
}

await init();
for (const id of ["path-n", "path-k"]) document.getElementById(id).addEventListener("input", drawPath);
for (const id of ["fam", "fam-a", "fam-b", "fam-k", "fam-set"]) {
  document.getElementById(id).addEventListener("input", drawFamily);
}
document.getElementById("tree-go").addEventListener("click", drawTree);
drawPath();
drawFamily();
drawTree();
