"""A tiny randomly initialized BERT for tests.

Real pretrained weights are not needed; tests only require a working
encoder with deterministic weights, multi-subword words in the
vocabulary, and a small position limit so truncation is reachable.
"""

from __future__ import annotations

VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    "the", "cat", "##s", "sat", "on", "a", "mat", "dog", "big", "red",
    "un", "##icorn", "ship", "##ping", "jump", "##ed", "quick", "##ly",
    "bird", "tree", "sky", "ran", "home", "now",
]

WORDS = [w for w in VOCAB if not w.startswith("[") and not w.startswith("##")]

HIDDEN = 16
LAYERS = 2
MAX_POSITIONS = 64


def build_tiny_model(model_dir) -> str:
    """Create and save the model and tokenizer; returns the directory."""
    from pathlib import Path

    import torch
    from transformers import BertConfig, BertModel, BertTokenizerFast

    model_dir = Path(model_dir)
    model_dir.mkdir(parents=True, exist_ok=True)
    vocab_file = model_dir / "vocab.txt"
    vocab_file.write_text("\n".join(VOCAB) + "\n", encoding="utf-8")

    torch.manual_seed(0)
    config = BertConfig(
        vocab_size=len(VOCAB),
        hidden_size=HIDDEN,
        num_hidden_layers=LAYERS,
        num_attention_heads=2,
        intermediate_size=32,
        max_position_embeddings=MAX_POSITIONS,
    )
    BertModel(config).save_pretrained(model_dir)
    tokenizer = BertTokenizerFast(str(vocab_file), model_max_length=MAX_POSITIONS)
    tokenizer.save_pretrained(model_dir)
    return str(model_dir)
