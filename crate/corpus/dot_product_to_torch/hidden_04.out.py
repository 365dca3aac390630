import torch
def batch_scores(batch, w):
    scores = []
    for x in batch:
        s = torch.dot(x, w)
        scores.append(s)
    return torch.tensor(scores)
