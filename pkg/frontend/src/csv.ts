/** CSV export of the entered observations (string-level, so the file
 * reproduces the data exactly as typed). */

export function buildCsv(header: string[], rows: string[][]): string {
  const quote = (cell: string) =>
    /[",\n]/.test(cell) ? `"${cell.replace(/"/g, '""')}"` : cell;
  const lines = [header, ...rows].map((row) => row.map(quote).join(","));
  return lines.join("\n") + "\n";
}

export function downloadText(filename: string, text: string, mime = "text/csv"): void {
  const blob = new Blob([text], { type: mime });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = filename;
  document.body.append(link);
  link.click();
  link.remove();
  URL.revokeObjectURL(url);
}
