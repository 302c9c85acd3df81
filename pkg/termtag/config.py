import os
from dotenv import load_dotenv

load_dotenv()


def _int_list(value):
    return [int(item) for item in value.split(',') if item.strip()]


class Config:
    # Randomness: every sampled or random choice derives from this seed
    SEED = int(os.environ.get('TERMTAG_SEED') or 1234)

    # Annotation
    ANNOTATION_RATE = float(os.environ.get('TERMTAG_RATE') or 0.1)
    CASING = os.environ.get('TERMTAG_CASING') or 'insensitive'

    # Worker pool
    WORKERS = int(os.environ.get('TERMTAG_WORKERS') or 1)
    BATCH_SIZE = int(os.environ.get('TERMTAG_BATCH_SIZE') or 10000)

    # Subword segmentation
    NUM_MERGES = int(os.environ.get('TERMTAG_NUM_MERGES') or 40000)
    MIN_FREQUENCY = int(os.environ.get('TERMTAG_MIN_FREQUENCY') or 2)

    # Evaluation
    TERM_WEIGHT = float(os.environ.get('TERMTAG_TERM_WEIGHT') or 2.0)
    WINDOW_SIZES = _int_list(os.environ.get('TERMTAG_WINDOW_SIZES') or '2,3')

    LOG_LEVEL = os.environ.get('TERMTAG_LOG_LEVEL') or 'INFO'
