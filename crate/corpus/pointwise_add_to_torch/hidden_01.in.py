import torch

def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

left = torch.randn(4)
right = torch.randn(4)
print('adding')
total = []
for n in range(len(left)):
    total.append(left[n] + right[n])
print(total)
