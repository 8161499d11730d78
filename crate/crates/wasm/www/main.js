import init, { opTable, nuclei, verifyVariety } from "./pkg/nucleon_wasm.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, attrs = {}) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  Object.assign(e, attrs);
  return e;
}

// Runs `f`, rendering its result or the thrown message into `out`.
function guarded(out, f) {
  out.replaceChildren();
  try {
    f(out);
  } catch (e) {
    out.append(el("p", String(e), { className: "err" }));
  }
}

function heat(rank, levels) {
  const t = levels > 1 ? rank / (levels - 1) : 1;
  const light = 95 - 55 * t;
  return `hsl(210, 60%, ${light}%)`;
}

function drawOpTable(out) {
  const data = JSON.parse(opTable($("op-chain").value, $("op-kind").value, Number($("op-window").value)));
  const table = el("table");
  const head = el("tr");
  head.append(el("th", data.op));
  data.labels.forEach((l) => head.append(el("th", l)));
  table.append(head);
  data.cells.forEach((row, i) => {
    const tr = el("tr");
    tr.append(el("th", data.labels[i]));
    row.forEach((cell, j) => {
      const td = el("td", cell);
      td.style.background = heat(data.ranks[i][j], data.levels);
      if (data.ranks[i][j] > data.levels * 0.7) td.style.color = "#fff";
      tr.append(td);
    });
    table.append(tr);
  });
  out.append(table);
}

function drawNuclei(out) {
  const data = JSON.parse(nuclei($("nu-chain").value));
  out.append(el("p", `${data.nuclei.length} nuclei on ${data.elements.length} elements`));
  const table = el("table");
  const head = el("tr");
  ["kind", ...data.elements.map((e) => `γ ${e}`), "dense", "Glivenko"].forEach((h) => head.append(el("th", h)));
  table.append(head);
  for (const n of data.nuclei) {
    const tr = el("tr");
    tr.append(el("td", n.kind));
    n.values.forEach((v) => tr.append(el("td", v)));
    tr.append(el("td", n.dense.join(" ")));
    tr.append(el("td", n.glivenko ? "yes" : "no", { className: n.glivenko ? "ok" : "bad" }));
    table.append(tr);
  }
  out.append(table);
}

function drawVariety(out) {
  const r = JSON.parse(verifyVariety($("va-gens").value, Number($("va-window").value)));
  const c = r.catalog;
  out.append(el("p", `case (${c.case}), condition ${c.condition}, m = ${c.m ?? "-"}`));
  out.append(el("p", `nucleus terms: ${c.terms.join(", ")}`));
  const table = el("table");
  const head = el("tr");
  ["generator", "term", "check", "status", "witness"].forEach((h) => head.append(el("th", h)));
  table.append(head);
  for (const ch of r.checks) {
    const tr = el("tr");
    const bad = ch.status === "failed";
    tr.append(el("td", ch.generator), el("td", ch.term), el("td", ch.check));
    tr.append(el("td", ch.status, { className: bad ? "bad" : "ok" }));
    const w = ch.witness ? Object.entries(ch.witness).map(([k, v]) => `${k} = ${v}`).join("; ") : "";
    tr.append(el("td", w));
    table.append(tr);
  }
  out.append(table);
  for (const w of r.warnings) out.append(el("p", `${w.term}: ${w.message}`, { className: "err" }));
}

await init();
$("op-go").onclick = () => guarded($("op-out"), drawOpTable);
$("nu-go").onclick = () => guarded($("nu-out"), drawNuclei);
$("va-go").onclick = () => guarded($("va-out"), drawVariety);
guarded($("op-out"), drawOpTable);
