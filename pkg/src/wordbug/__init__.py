"""Query-efficient black-box adversarial attacks on text classifiers."""

__version__ = "0.1.0"
