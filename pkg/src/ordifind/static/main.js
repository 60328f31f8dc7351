/**
 * Entry point: load the document from the serving endpoint, or fall back to
 * a file picker for fully static deployments.
 */
import { DocumentFormatError } from "./document.js";
import { loadDocument } from "./state.js";
import { App, showError } from "./ui.js";
async function boot() {
    const root = document.getElementById("app");
    if (!root)
        return;
    const start = (raw) => {
        try {
            new App(root, loadDocument(raw)).render();
        }
        catch (err) {
            if (err instanceof DocumentFormatError) {
                showError(root, `Cannot load document: ${err.message}`);
            }
            else {
                throw err;
            }
        }
    };
    try {
        const resp = await fetch("/factorization.json");
        if (!resp.ok)
            throw new Error(`HTTP ${resp.status}`);
        start(await resp.text());
    }
    catch {
        const picker = document.createElement("input");
        picker.type = "file";
        picker.accept = ".json,application/json";
        const hint = document.createElement("p");
        hint.textContent = "Select a factorization document (.factors.json):";
        root.replaceChildren(hint, picker);
        picker.addEventListener("change", async () => {
            const file = picker.files?.[0];
            if (file)
                start(await file.text());
        });
    }
}
boot();
