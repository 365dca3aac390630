"""Minimal training utilities."""
import torch

def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def reset(model):
    model.zero_grad()
    return model
