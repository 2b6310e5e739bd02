import init, { builtinNames, inspect, deform, compare } from "./pkg/ybe_demo.js";

const $ = (id) => document.getElementById(id);
let labels = [];

function source() {
  const pasted = $("doc").value.trim();
  return pasted || $("builtin").value;
}

function guarded(f) {
  return () => {
    $("error").textContent = "";
    try {
      f();
    } catch (e) {
      $("error").textContent = e.message ?? String(e);
    }
  };
}

function flag(b) {
  return `<span class="${b ? "yes" : "no"}">${b ? "yes" : "no"}</span>`;
}

function cayley(title, rows, names) {
  const head = names.map((l) => `<th>${l}</th>`).join("");
  const body = rows
    .map((row, a) => `<tr><th>${names[a]}</th>${row.map((x) => `<td>${names[x]}</td>`).join("")}</tr>`)
    .join("");
  return `<table><caption>${title}</caption><tr><th></th>${head}</tr>${body}</table>`;
}

function fillSelects(names) {
  for (const id of ["z", "z1", "z2"]) {
    $(id).innerHTML = names.map((l, i) => `<option value="${i}">${l}</option>`).join("");
  }
}

const onInspect = guarded(() => {
  const v = JSON.parse(inspect(source()));
  labels = v.labels;
  fillSelects(labels);
  const cols = ["braid", "bijective", "left_nondeg", "right_nondeg", "involutive"];
  const rows = v.rows
    .map((r) => `<tr class="${r.in_distributor ? "dist" : ""}"><td>${r.label}</td><td>${flag(r.in_distributor)}</td>` +
      cols.map((c) => `<td>${flag(r[c])}</td>`).join("") + "</tr>")
    .join("");
  $("overview").innerHTML =
    `<p>${v.n} elements, level <b>${v.level}</b>, ${v.two_sided ? "two-sided" : "not two-sided"}. ` +
    `Right distributor: {${v.distributor.map((i) => labels[i]).join(", ")}}.</p>` +
    cayley("+", v.add, labels) + cayley("∘", v.mul, labels) +
    `<table><tr><th>z</th><th>in D</th>${cols.map((c) => `<th>${c}</th>`).join("")}</tr>${rows}</table>`;
  $("deformed").innerHTML = "";
  $("comparison").innerHTML = "";
});

const onDeform = guarded(() => {
  const v = JSON.parse(deform(source(), Number($("z").value)));
  const s = v.summary;
  $("deformed").innerHTML =
    cayley("first component", v.sigma, v.labels) + cayley("second component", v.tau, v.labels) +
    `<p>z in distributor: ${flag(v.in_distributor)}; braid: ${flag(s.braid)}; bijective: ${flag(s.bijective)}; ` +
    `involutive: ${flag(s.involutive)}</p>`;
});

const onCompare = guarded(() => {
  const v = JSON.parse(compare(source(), Number($("z1").value), Number($("z2").value)));
  $("comparison").innerHTML = v.equivalent
    ? `<p>Equivalent via ${labels.map((l, i) => `${l} ↦ ${v.witness[i]}`).join(", ")}.</p>`
    : "<p>No equivalence exists.</p>";
});

await init();
$("builtin").innerHTML = JSON.parse(builtinNames()).map((n) => `<option>${n}</option>`).join("");
$("builtin").addEventListener("change", onInspect);
$("inspect").addEventListener("click", onInspect);
$("deform").addEventListener("click", onDeform);
$("compare").addEventListener("click", onCompare);
onInspect();
