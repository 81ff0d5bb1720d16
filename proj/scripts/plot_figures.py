"""Plots the CSVs written by reproduce_figures.sh."""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def load(path):
    lines = [l for l in Path(path).read_text().splitlines() if not l.startswith("#")]
    header, body = lines[0].split(","), lines[2:]
    rows = [l.split(",") for l in body]
    df = pd.DataFrame(rows, columns=header)
    for c in df.columns:
        if c not in ("weather", "status"):
            df[c] = pd.to_numeric(df[c], errors="coerce")
    return df


def atten(out, files, name):
    fig, ax = plt.subplots(figsize=(6, 4))
    for f in files:
        df = load(out / f)
        for freq, g in df.groupby("freq_ghz"):
            for col, style in [("pl_clear_db", ":"), ("pl_rain_db", "-"), ("pl_fog_db", "--"), ("pl_snow_db", "-.")]:
                if f.endswith("350_900.csv") and col == "pl_snow_db":
                    continue
                ax.plot(g["distance_km"], g[col], style, label=f"{freq:g} GHz {col[3:-3]}")
    ax.set_xlabel("distance (km)")
    ax.set_ylabel("path loss (dB)")
    ax.legend(fontsize=6, ncol=2)
    fig.tight_layout()
    fig.savefig(out / name, dpi=150)


def coverage(out, files, name):
    fig, ax = plt.subplots(figsize=(6, 4))
    for f in files:
        df = load(out / f)
        freq = df["freq_ghz"].iloc[0]
        for col in ["radius_clear_m", "radius_rain_m", "radius_fog_m", "radius_snow_m"]:
            y = df[col]
            if y.notna().any():
                ax.plot(y, df["h_m"], label=f"{freq:g} GHz {col[7:-2]}")
    ax.set_xlabel("cell radius (m)")
    ax.set_ylabel("UAV altitude (m)")
    ax.legend(fontsize=6)
    fig.tight_layout()
    fig.savefig(out / name, dpi=150)


def snr(out):
    df = load(out / "fig7_snr.csv")
    fig, ax = plt.subplots(figsize=(6, 4))
    for (freq, weather), g in df.groupby(["freq_ghz", "weather"]):
        ax.plot(g["distance_m"], g["snr_db"], label=f"{freq:g} GHz {weather}")
    ax.set_xlabel("distance (m)")
    ax.set_ylabel("SNR (dB)")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out / "fig7_snr.png", dpi=150)


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    atten(out, ["fig1_atten_2_5_28.csv"], "fig1_atten.png")
    atten(out, ["fig2_atten_39_60_100.csv"], "fig2_atten.png")
    atten(out, ["fig3_atten_188.csv", "fig3_atten_350_900.csv"], "fig3_atten.png")
    coverage(out, ["fig5_coverage_28.csv", "fig5_coverage_60.csv"], "fig5_coverage.png")
    coverage(out, ["fig6_coverage_350.csv", "fig6_coverage_900.csv"], "fig6_coverage.png")
    snr(out)
    print(f"figures written to {out}")


if __name__ == "__main__":
    main()
