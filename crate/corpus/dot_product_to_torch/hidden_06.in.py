import torch

def response(x, w, sparse):
    if sparse:
        return torch.sparse.mm(x, w)
    else:
        r = 0
        for i in range(len(x)):
            r += x[i] * w[i]
        return r
