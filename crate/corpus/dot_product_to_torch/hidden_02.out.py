import torch
def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def logit(query, key, scale):
    dot = torch.dot(query, key)
    return torch.exp(dot / scale)
