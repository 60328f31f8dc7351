/**
 * DOM rendering and event wiring. All state transitions live in state.ts;
 * this layer only draws the current state and forwards events.
 */
import { onObjectClick, onSliderChange } from "./state.js";
import { objectPosition } from "./ranking.js";
const MAX_LABEL_CHARS = 18;
const MAX_RANKING_ROWS = 500;
function truncate(text) {
    return text.length <= MAX_LABEL_CHARS
        ? text
        : text.slice(0, MAX_LABEL_CHARS - 1) + "…";
}
export class App {
    constructor(root, state) {
        this.searchTerm = "";
        this.root = root;
        this.state = state;
    }
    render() {
        this.root.replaceChildren(this.renderStats(), this.renderSliders(), this.renderRanking(), this.renderScatter());
    }
    apply(next) {
        this.state = next;
        this.render();
    }
    renderStats() {
        const doc = this.state.document;
        const div = el("div", "stats");
        const bits = [
            `${doc.objects.length} objects`,
            `${doc.attributes.length} attributes`,
            `${doc.stats.incidences} incidences`,
            `${doc.factors.length} factors`,
        ];
        if (doc.stats.concepts !== null)
            bits.push(`${doc.stats.concepts} concepts`);
        div.textContent = bits.join(" · ");
        return div;
    }
    renderSliders() {
        const section = el("section", "sliders");
        if (this.state.sliders.length === 0) {
            const empty = el("p", "empty-state");
            empty.textContent = "This document contains no factors.";
            section.appendChild(empty);
            return section;
        }
        this.state.sliders.forEach((model, i) => {
            const block = el("div", "slider-block");
            const title = el("div", "slider-title");
            title.textContent = `factor ${i + 1}`;
            block.appendChild(title);
            const input = document.createElement("input");
            input.type = "range";
            input.min = "0";
            input.max = String(model.positionCount - 1);
            input.step = "1";
            input.value = String(this.state.selection[i]);
            input.dataset.factor = String(i);
            input.addEventListener("input", () => {
                this.apply(onSliderChange(this.state, i, Number(input.value)));
            });
            block.appendChild(input);
            const labels = el("div", "tick-labels");
            const zero = el("span", "tick-label zero");
            zero.textContent = "0";
            zero.title = "empty selection";
            labels.appendChild(zero);
            model.tickLabels.forEach((gained, t) => {
                const span = el("span", "tick-label" + (this.state.selection[i] === t + 1 ? " active" : ""));
                const full = gained.join(", ");
                span.textContent = truncate(full);
                span.title = full; // full text on hover
                span.addEventListener("click", () => {
                    this.apply(onSliderChange(this.state, i, t + 1));
                });
                labels.appendChild(span);
            });
            block.appendChild(labels);
            section.appendChild(block);
        });
        return section;
    }
    renderRanking() {
        const section = el("section", "ranking");
        const doc = this.state.document;
        if (doc.incidence === null) {
            const note = el("p", "empty-state");
            note.textContent =
                "Document was exported without incidence data; ranking is unavailable.";
            section.appendChild(note);
            return section;
        }
        const search = document.createElement("input");
        search.type = "search";
        search.placeholder = "filter objects…";
        search.value = this.searchTerm;
        search.addEventListener("input", () => {
            this.searchTerm = search.value;
            this.render();
        });
        section.appendChild(search);
        const table = document.createElement("table");
        const body = document.createElement("tbody");
        const needle = this.searchTerm.toLowerCase();
        let shown = 0;
        let matched = 0;
        for (const entry of this.state.ranked) {
            if (needle && !entry.name.toLowerCase().includes(needle))
                continue;
            matched++;
            if (shown >= MAX_RANKING_ROWS)
                continue;
            shown++;
            const row = document.createElement("tr");
            if (entry.objectIndex === this.state.selectedObject)
                row.className = "selected";
            const nameCell = document.createElement("td");
            nameCell.textContent = entry.name;
            const distCell = document.createElement("td");
            distCell.textContent = String(entry.distance);
            row.append(nameCell, distCell);
            row.addEventListener("click", () => {
                this.apply(onObjectClick(this.state, entry.objectIndex));
            });
            body.appendChild(row);
        }
        table.appendChild(body);
        section.appendChild(table);
        if (matched > shown) {
            const note = el("p", "empty-state");
            note.textContent = `showing ${shown} of ${matched} objects; narrow the search to see the rest`;
            section.appendChild(note);
        }
        return section;
    }
    renderScatter() {
        const section = el("section", "scatter");
        const doc = this.state.document;
        if (doc.factors.length < 2 || doc.incidence === null)
            return section;
        const heading = el("div", "scatter-title");
        heading.textContent = "objects in the two leading factors";
        section.appendChild(heading);
        const tc1 = doc.factors[0].ticks.length;
        const tc2 = doc.factors[1].ticks.length;
        const width = 420;
        const height = 260;
        const pad = 30;
        const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
        svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
        const sx = (x) => pad + (x / Math.max(tc1, 1)) * (width - 2 * pad);
        const sy = (y) => height - pad - (y / Math.max(tc2, 1)) * (height - 2 * pad);
        doc.objects.forEach((name, g) => {
            const x = objectPosition(doc, 0, g);
            const y = objectPosition(doc, 1, g);
            const dot = document.createElementNS("http://www.w3.org/2000/svg", "circle");
            dot.setAttribute("cx", String(sx(x)));
            dot.setAttribute("cy", String(sy(y)));
            dot.setAttribute("r", "4");
            const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
            label.setAttribute("x", String(sx(x) + 6));
            label.setAttribute("y", String(sy(y) - 4));
            label.textContent = name;
            svg.append(dot, label);
        });
        section.appendChild(svg);
        return section;
    }
}
export function showError(root, message) {
    const banner = el("div", "error-banner");
    banner.textContent = message;
    root.replaceChildren(banner);
}
function el(tag, className) {
    const node = document.createElement(tag);
    node.className = className;
    return node;
}
