"""lamBERT: a multimodal transformer agent trained with PPO plus a masked-token
prediction auxiliary loss in language-conditioned gridworlds."""

__version__ = "0.1.0"
