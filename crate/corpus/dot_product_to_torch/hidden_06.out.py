import torch
def response(x, w, sparse):
    if sparse:
        return torch.sparse.mm(x, w)
    else:
        r = torch.dot(x, w)
        return r
