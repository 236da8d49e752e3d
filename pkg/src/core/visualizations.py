"""
Charts for sweep reports.
"""
import base64
import io
from typing import Optional

import matplotlib
matplotlib.use('Agg')  # Use non-interactive backend
import matplotlib.pyplot as plt
import pandas as pd

INSIDE_COLOR = '#1dd1a1'
OUTSIDE_COLOR = '#ff6b6b'


def _figure_to_base64(fig) -> str:
    buffer = io.BytesIO()
    fig.savefig(buffer, format='png', dpi=100, bbox_inches='tight')
    plt.close(fig)
    return base64.b64encode(buffer.getvalue()).decode()


def generate_acceptance_chart(df: pd.DataFrame, bit_length: int) -> Optional[str]:
    """
    Bar chart of flawed-verifier acceptance per compared-bit count.

    Bars inside the attack bound are green, bars outside it red; the bound
    itself is a dashed vertical line.

    Args:
        df: Sweep DataFrame (SweepReport.to_dataframe())
        bit_length: Modulus length the sweep ran against

    Returns:
        Base64 encoded PNG, or None for a sweep without rows
    """
    if df.empty:
        return None

    rates = df['acceptance_rate'] * 100
    colors = [INSIDE_COLOR if inside else OUTSIDE_COLOR for inside in df['bound_satisfied']]

    fig, ax = plt.subplots(figsize=(10, 6))
    bars = ax.bar(df['b'], rates, color=colors)
    ax.axvline(bit_length / 3 - 3, color='black', linestyle='--', linewidth=1, label='b = bits/3 - 3')
    ax.bar_label(bars, labels=[f'{rate:.0f}%' for rate in rates], fontsize=9)
    ax.set_xlabel('Compared low-order bits (b)', fontsize=12)
    ax.set_ylabel('Flawed verifier acceptance (%)', fontsize=12)
    ax.set_title(f'Forgery acceptance around the bound ({bit_length}-bit modulus)', fontsize=14, fontweight='bold')
    ax.set_ylim(0, 110)
    ax.grid(axis='y', alpha=0.3, linestyle='--')
    ax.legend()
    fig.tight_layout()

    return _figure_to_base64(fig)
