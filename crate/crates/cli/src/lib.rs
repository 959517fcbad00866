pub mod patch_file; pub mod svg;
