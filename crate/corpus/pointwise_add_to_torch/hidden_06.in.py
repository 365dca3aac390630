import torch

def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

inp = torch.randn(6)
block_out = torch.tanh(inp)
merged = [0] * len(inp)
for i in range(len(inp)):
    merged[i] = inp[i] + block_out[i]
print(torch.tensor(merged).sum())
