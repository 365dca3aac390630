def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
count = 12
if count > 10:
    label = 'many'
else:
    label = 'few'
print(label)
