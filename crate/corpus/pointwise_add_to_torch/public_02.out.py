import torch
def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
x = torch.ones(5)
y = torch.arange(5.0)
z = torch.add(x, y)
print(z)
