import torch

def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def logit(query, key, scale):
    dot = 0
    for d in range(len(query)):
        dot += query[d] * key[d]
    return torch.exp(dot / scale)
